#include "qdeform/surd.hpp"

#include <map>
#include <sstream>
#include <tuple>

namespace qdeform {

Surd::Surd(Int r, int sgn, Int p, Int s) {
    if (p <= 0 || is_square(p)) throw std::domain_error("Surd: radicand must be a positive non-square");
    if (s <= 0) throw std::domain_error("Surd: denominator must be positive");
    if (sgn != 1 && sgn != -1) throw std::domain_error("Surd: sign must be ±1");
    *this = make(std::move(r), sgn, std::move(p), std::move(s));
}

Surd Surd::make(Int a, Int b, Int d, Int c) {
    if (b == 0) throw std::domain_error("Surd: rational value");
    if (c == 0) throw std::domain_error("Surd: zero denominator");
    if (d <= 0 || is_square(d)) throw std::domain_error("Surd: radicand must be a positive non-square");
    Surd x;
    x.a_ = std::move(a);
    x.b_ = std::move(b);
    x.d_ = std::move(d);
    x.c_ = std::move(c);
    x.normalize();
    return x;
}

void Surd::normalize() {
    const Int f = square_part(d_);
    if (f > 1) {
        d_ /= f * f;
        b_ *= f;
    }
    if (c_ < 0) {
        a_ = -a_;
        b_ = -b_;
        c_ = -c_;
    }
    Int g = gcd_int(gcd_int(a_, b_), c_);
    if (g > 1) {
        a_ /= g;
        b_ /= g;
        c_ /= g;
    }
}

bool Surd::operator<(const Surd& o) const {
    return std::tie(a_, b_, d_, c_) < std::tie(o.a_, o.b_, o.d_, o.c_);
}

namespace {
// Sign of u + v*sqrt(d) for d > 0 non-square, exact.
int sign_lin(const Int& u, const Int& v, const Int& d) {
    if (v == 0) return sign_of(u);
    if (v > 0) {
        if (u >= 0) return 1;
        return u * u < v * v * d ? 1 : -1;
    }
    if (u <= 0) return -1;
    return u * u > v * v * d ? 1 : -1;
}
}  // namespace

int Surd::compare_rational(const Int& num, const Int& den) const {
    if (den == 0) throw std::domain_error("compare_rational: zero denominator");
    // (a + b sqrt(d))/c - num/den  ~  sign((a*den - num*c) + b*den*sqrt(d)) * sign(den)
    const int flip = den > 0 ? 1 : -1;
    return flip * sign_lin(a_ * den - num * c_, b_ * den, d_);
}

Int Surd::floor() const {
    // Bracket sqrt(d): f <= sqrt(d) < f+1.
    const Int f = isqrt(d_);
    Int lo, hi;
    if (b_ > 0) {
        lo = a_ + b_ * f;
        hi = a_ + b_ * (f + 1);
    } else {
        lo = a_ + b_ * (f + 1);
        hi = a_ + b_ * f;
    }
    Int cand = floor_div(lo, c_);
    const Int cand_hi = floor_div(hi, c_);
    while (cand < cand_hi && compare_rational(cand + 1, 1) > 0) ++cand;
    return cand;
}

Int Surd::ceil() const { return floor() + 1; }

Surd Surd::negated() const { return make(-a_, -b_, d_, c_); }

Surd Surd::shifted(const Int& n) const { return make(a_ + n * c_, b_, d_, c_); }

Surd Surd::reciprocal() const {
    // c/(a + b sqrt(d)) = c(a - b sqrt(d)) / (a^2 - b^2 d)
    const Int n = a_ * a_ - b_ * b_ * d_;
    return make(c_ * a_, -c_ * b_, d_, n);
}

Surd Surd::conjugate() const { return make(a_, -b_, d_, c_); }

Surd Surd::mobius(const Int& p, const Int& r, const Int& t, const Int& u) const {
    // (p x + r)/(t x + u) with x = (a + b sqrt(d))/c:
    // numerator   (p a + r c) + p b sqrt(d)
    // denominator (t a + u c) + t b sqrt(d)
    const Int nu = p * a_ + r * c_, nv = p * b_;
    const Int du = t * a_ + u * c_, dv = t * b_;
    const Int norm = du * du - dv * dv * d_;
    if (norm == 0) throw std::domain_error("mobius: denominator vanishes");
    // Multiply by the conjugate of the denominator.
    return make(nu * du - nv * dv * d_, nv * du - nu * dv, d_, norm);
}

std::string Surd::str() const {
    std::ostringstream os;
    const bool wrap = a_ != 0 || c_ != 1;
    if (wrap && c_ != 1) os << "(";
    if (a_ != 0) os << a_;
    if (b_ == 1)
        os << (a_ != 0 ? "+" : "");
    else if (b_ == -1)
        os << "-";
    else
        os << (a_ != 0 && b_ > 0 ? "+" : "") << b_ << "*";
    os << "sqrt(" << d_ << ")";
    if (c_ != 1) os << ")/" << c_;
    return os.str();
}

std::string PeriodicCF::str() const {
    std::ostringstream os;
    os << "[[";
    for (std::size_t i = 0; i < preperiod.size(); ++i) {
        if (i) os << ",";
        os << preperiod[i];
    }
    if (!preperiod.empty()) os << ",";
    os << "(";
    for (std::size_t i = 0; i < period.size(); ++i) {
        if (i) os << ",";
        os << period[i];
    }
    os << ")]]";
    return os.str();
}

CFWord PeriodicCF::prefix_word(std::size_t total_len) const {
    CFWord w;
    w.flavor = CFFlavor::Negative;
    w.coeffs = preperiod;
    std::size_t i = 0;
    while (w.coeffs.size() < total_len) {
        w.coeffs.push_back(period[i % period.size()]);
        ++i;
    }
    return w;
}

PeriodicCF periodic_negative_cf(const Surd& x) {
    constexpr int kMaxIter = 100000;
    std::map<Surd, std::size_t> seen;
    std::vector<std::int64_t> coeffs;
    Surd state = x;
    for (int iter = 0; iter < kMaxIter; ++iter) {
        auto [it, inserted] = seen.emplace(state, coeffs.size());
        if (!inserted) {
            PeriodicCF out;
            out.preperiod.assign(coeffs.begin(),
                                 coeffs.begin() + static_cast<std::ptrdiff_t>(it->second));
            out.period.assign(coeffs.begin() + static_cast<std::ptrdiff_t>(it->second),
                              coeffs.end());
            return out;
        }
        const Int c = state.ceil();
        coeffs.push_back(c.convert_to<std::int64_t>());
        // x' = 1/(c - x)
        state = state.negated().shifted(c).reciprocal();
    }
    throw std::runtime_error("periodic_negative_cf: iteration cap exceeded");
}

Surd parse_surd(std::string_view text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty surd");

    Int den = 1;
    if (s.front() == '(') {
        const auto close = s.rfind(')');
        if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in surd");
        std::string tail = s.substr(close + 1);
        s = s.substr(1, close - 1);
        if (!tail.empty()) {
            if (tail.front() != '/') throw std::invalid_argument("expected '/' after ')' in surd");
            den = Int(tail.substr(1));
        }
    }
    // Now s is "a", "a±b*sqrt(d)", "±b*sqrt(d)" or "sqrt(d)".
    const auto sq = s.find("sqrt(");
    if (sq == std::string::npos || s.back() != ')')
        throw std::invalid_argument("surd must contain sqrt(...)");
    Int d(s.substr(sq + 5, s.size() - sq - 6));
    std::string head = s.substr(0, sq);
    Int a = 0, b = 1;
    if (!head.empty()) {
        // Split the optional "a±" prefix and the optional "b*" multiplier.
        std::size_t split = head.size();
        while (split > 0 && (std::isdigit(static_cast<unsigned char>(head[split - 1])) ||
                             head[split - 1] == '*'))
            --split;
        // head[split-1] is now a sign or the end of the rational part.
        std::string bpart = head.substr(split);
        if (!bpart.empty() && bpart.back() == '*') bpart.pop_back();
        int bsign = 1;
        if (split > 0) {
            const char sgn = head[split - 1];
            if (sgn != '+' && sgn != '-')
                throw std::invalid_argument("cannot parse surd '" + std::string(text) + "'");
            bsign = sgn == '-' ? -1 : 1;
            std::string apart = head.substr(0, split - 1);
            if (!apart.empty()) a = Int(apart);
        }
        if (!bpart.empty()) b = Int(bpart);
        b *= bsign;
    }
    try {
        return Surd::make(a, b, d, den);
    } catch (const std::domain_error& e) {
        throw std::invalid_argument(std::string("bad surd: ") + e.what());
    }
}

}  // namespace qdeform
