#include "qdeform/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qdeform {

namespace {
const Int kZero = 0;
}

Int square_part(Int n) {
    if (n <= 0) throw std::domain_error("square_part: argument must be positive");
    Int out = 1;
    for (Int d = 2; d * d <= n; ++d) {
        while (n % (d * d) == 0) {
            n /= d * d;
            out *= d;
        }
    }
    return out;
}

LaurentPoly::LaurentPoly(Int constant) {
    if (constant != 0) terms_.emplace_back(0, std::move(constant));
}

LaurentPoly LaurentPoly::monomial(Int coeff, std::int64_t exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace_back(exp, std::move(coeff));
    return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    LaurentPoly p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first)
            p.terms_.back().second += t.second;
        else
            p.terms_.push_back(std::move(t));
    }
    p.normalize();
    return p;
}

LaurentPoly LaurentPoly::from_coeffs(const std::vector<Int>& coeffs, std::int64_t start) {
    LaurentPoly p;
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] != 0)
            p.terms_.emplace_back(start + static_cast<std::int64_t>(i), coeffs[i]);
    return p;
}

void LaurentPoly::normalize() {
    terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                                [](const Term& t) { return t.second == 0; }),
                 terms_.end());
}

std::int64_t LaurentPoly::min_deg() const {
    if (is_zero()) throw std::domain_error("min_deg of zero polynomial");
    return terms_.front().first;
}

std::int64_t LaurentPoly::max_deg() const {
    if (is_zero()) throw std::domain_error("max_deg of zero polynomial");
    return terms_.back().first;
}

const Int& LaurentPoly::coeff(std::int64_t exp) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, std::int64_t e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return kZero;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

std::optional<std::pair<int, std::int64_t>> LaurentPoly::unit_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    if (terms_[0].second == 1) return std::make_pair(1, terms_[0].first);
    if (terms_[0].second == -1) return std::make_pair(-1, terms_[0].first);
    return std::nullopt;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p(*this);
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto i = terms_.begin();
    auto j = rhs.terms_.begin();
    while (i != terms_.end() && j != rhs.terms_.end()) {
        if (i->first < j->first) {
            out.push_back(*i++);
        } else if (j->first < i->first) {
            out.push_back(*j++);
        } else {
            Int c = i->second + j->second;
            if (c != 0) out.emplace_back(i->first, std::move(c));
            ++i;
            ++j;
        }
    }
    out.insert(out.end(), i, terms_.end());
    out.insert(out.end(), j, rhs.terms_.end());
    terms_ = std::move(out);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    const std::int64_t lo = a.min_deg() + b.min_deg();
    const std::int64_t hi = a.max_deg() + b.max_deg();
    std::vector<Int> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& ta : a.terms())
        for (const auto& tb : b.terms())
            dense[static_cast<std::size_t>(ta.first + tb.first - lo)] += ta.second * tb.second;
    return LaurentPoly::from_coeffs(dense, lo);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

LaurentPoly LaurentPoly::scaled(const Int& k) const {
    if (k == 0) return LaurentPoly();
    LaurentPoly p(*this);
    for (auto& t : p.terms_) t.second *= k;
    return p;
}

LaurentPoly LaurentPoly::shifted(std::int64_t n) const {
    LaurentPoly p(*this);
    for (auto& t : p.terms_) t.first += n;
    return p;
}

LaurentPoly LaurentPoly::reversed() const {
    LaurentPoly p;
    p.terms_.reserve(terms_.size());
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
        p.terms_.emplace_back(-it->first, it->second);
    return p;
}

Int LaurentPoly::eval_one() const {
    Int s = 0;
    for (const auto& t : terms_) s += t.second;
    return s;
}

bool LaurentPoly::is_palindrome() const {
    if (is_zero()) return true;
    const std::int64_t edge = min_deg() + max_deg();
    std::size_t i = 0, j = terms_.size() - 1;
    while (i < j) {
        if (terms_[i].first + terms_[j].first != edge) return false;
        if (terms_[i].second != terms_[j].second) return false;
        ++i;
        --j;
    }
    // An unpaired middle term must sit exactly at the center.
    if (i == j && 2 * terms_[i].first != edge) return false;
    return true;
}

bool LaurentPoly::is_unimodal() const {
    if (is_zero()) return true;
    const std::int64_t lo = min_deg(), hi = max_deg();
    Int prev = coeff(lo);
    std::int64_t e = lo + 1;
    for (; e <= hi; ++e) {
        const Int& c = coeff(e);
        if (c < prev) break;
        prev = c;
    }
    for (; e <= hi; ++e) {
        const Int& c = coeff(e);
        if (c > prev) return false;
        prev = c;
    }
    return true;
}

bool LaurentPoly::has_nonneg_coeffs() const {
    for (const auto& t : terms_)
        if (t.second < 0) return false;
    return true;
}

bool LaurentPoly::has_interior_zero() const {
    if (is_zero()) return false;
    return static_cast<std::int64_t>(terms_.size()) != max_deg() - min_deg() + 1;
}

std::string LaurentPoly::render(bool spaced) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (spaced ? (neg ? " - " : " + ") : (neg ? "-" : "+"));
        }
        Int a = abs_int(c);
        if (e == 0) {
            os << a;
        } else {
            if (a != 1) os << a << (spaced ? "*" : "");
            os << "q";
            if (e != 1) os << "^" << e;
        }
        first = false;
    }
    return os.str();
}

std::string LaurentPoly::str() const { return render(true); }
std::string LaurentPoly::str_compact() const { return render(false); }

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
    if (d.is_zero()) throw std::domain_error("exact_divide: zero divisor");
    if (p.is_zero()) return LaurentPoly();

    // Work on ordinary polynomials; reapply the exponent shift at the end.
    const std::int64_t shift = p.min_deg() - d.min_deg();
    std::vector<Int> rem(static_cast<std::size_t>(p.max_deg() - p.min_deg() + 1));
    for (const auto& [e, c] : p.terms()) rem[static_cast<std::size_t>(e - p.min_deg())] = c;
    const std::int64_t dd = d.max_deg() - d.min_deg();
    std::vector<Int> div(static_cast<std::size_t>(dd + 1));
    for (const auto& [e, c] : d.terms()) div[static_cast<std::size_t>(e - d.min_deg())] = c;

    std::int64_t nd = static_cast<std::int64_t>(rem.size()) - 1;
    if (nd < dd) return std::nullopt;
    std::vector<Int> quot(static_cast<std::size_t>(nd - dd + 1));
    const Int& lead = div[static_cast<std::size_t>(dd)];
    for (std::int64_t k = nd - dd; k >= 0; --k) {
        Int& top = rem[static_cast<std::size_t>(k + dd)];
        if (top == 0) continue;
        if (top % lead != 0) return std::nullopt;
        Int f = top / lead;
        for (std::int64_t i = 0; i <= dd; ++i)
            rem[static_cast<std::size_t>(k + i)] -= f * div[static_cast<std::size_t>(i)];
        quot[static_cast<std::size_t>(k)] = std::move(f);
    }
    for (const Int& c : rem)
        if (c != 0) return std::nullopt;
    return LaurentPoly::from_coeffs(quot, shift);
}

Int poly_content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& t : p.terms()) {
        g = gcd_int(g, t.second);
        if (g == 1) break;
    }
    return g;
}

namespace {

// Ordinary primitive polynomial with positive leading coefficient.
LaurentPoly primitive_normalized(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly q = p.shifted(-p.min_deg());
    Int c = poly_content(q);
    if (q.terms().back().second < 0) c = -c;
    std::vector<LaurentPoly::Term> terms = q.terms();
    for (auto& t : terms) t.second /= c;
    return LaurentPoly::from_terms(std::move(terms));
}

// Pseudo-remainder of primitive ordinary polynomials, deg(a) >= deg(b).
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const std::int64_t db = b.max_deg();
    const Int& lb = b.coeff(db);
    while (!a.is_zero() && a.max_deg() >= db) {
        const std::int64_t da = a.max_deg();
        Int la = a.coeff(da);
        a = a.scaled(lb) - b.shifted(da - db).scaled(la);
    }
    return a;
}

}  // namespace

LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b) {
    if (a.is_zero()) return primitive_normalized(b).scaled(poly_content(b));
    if (b.is_zero()) return primitive_normalized(a).scaled(poly_content(a));
    const Int cont = gcd_int(poly_content(a), poly_content(b));
    a = primitive_normalized(a);
    b = primitive_normalized(b);
    if (a.max_deg() < b.max_deg()) std::swap(a, b);
    while (!b.is_zero()) {
        LaurentPoly r = primitive_normalized(pseudo_rem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a.scaled(cont);
}

LaurentPoly poly_pow(const LaurentPoly& base, unsigned long long e) {
    LaurentPoly out(1);
    LaurentPoly b = base;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

namespace {

struct Parser {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return s[i];
    }
    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("polynomial parse error: " + what + " in '" +
                                    std::string(s) + "'");
    }
    Int read_uint() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (i == start) fail("expected digits");
        return Int(std::string(s.substr(start, i - start)));
    }
    std::int64_t read_int() {
        skip_ws();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
            neg = s[i] == '-';
            ++i;
        }
        Int v = read_uint();
        if (neg) v = -v;
        return static_cast<std::int64_t>(v);
    }
};

}  // namespace

LaurentPoly parse_poly(std::string_view text) {
    Parser p{text};
    std::vector<LaurentPoly::Term> terms;
    bool first = true;
    while (!p.eof()) {
        int sign = 1;
        char c = p.peek();
        if (c == '+' || c == '-') {
            sign = c == '-' ? -1 : 1;
            ++p.i;
        } else if (!first) {
            p.fail("expected '+' or '-' between terms");
        }
        if (p.eof()) p.fail("dangling sign");
        Int coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(p.peek()))) {
            coeff = p.read_uint();
            have_coeff = true;
        }
        std::int64_t exp = 0;
        if (!p.eof() && (p.peek() == '*' || p.peek() == 'q')) {
            if (p.peek() == '*') {
                ++p.i;
                if (p.eof() || p.peek() != 'q') p.fail("expected q after '*'");
            }
            ++p.i;  // consume 'q'
            exp = 1;
            if (!p.eof() && p.peek() == '^') {
                ++p.i;
                exp = p.read_int();
            }
        } else if (!have_coeff) {
            p.fail("expected coefficient or q");
        }
        terms.emplace_back(exp, sign < 0 ? Int(-coeff) : coeff);
        first = false;
    }
    if (first) throw std::invalid_argument("polynomial parse error: empty input");
    return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly q_int(std::int64_t n) {
    std::vector<LaurentPoly::Term> terms;
    if (n > 0)
        for (std::int64_t e = 0; e < n; ++e) terms.emplace_back(e, 1);
    else
        for (std::int64_t e = -1; e >= n; --e) terms.emplace_back(e, -1);
    return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace qdeform
