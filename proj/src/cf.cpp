#include "qdeform/cf.hpp"

#include <sstream>

namespace qdeform {

Rational::Rational(Int n, Int d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    Int g = gcd_int(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    num = std::move(n);
    den = std::move(d);
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << "/" << den;
    return os.str();
}

bool CFWord::is_canonical() const {
    if (coeffs.empty()) return false;
    if (flavor == CFFlavor::Regular) {
        if (coeffs.size() % 2 != 0) return false;
        for (std::size_t i = 1; i < coeffs.size(); ++i)
            if (coeffs[i] < 1) return false;
    } else {
        for (std::size_t i = 1; i < coeffs.size(); ++i)
            if (coeffs[i] < 2) return false;
    }
    return true;
}

std::string CFWord::str() const {
    std::ostringstream os;
    os << (flavor == CFFlavor::Regular ? "[" : "[[");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ",";
        os << coeffs[i];
    }
    os << (flavor == CFFlavor::Regular ? "]" : "]]");
    return os.str();
}

CFWord regular_cf(const Int& r, const Int& s) {
    if (s <= 0) throw std::domain_error("regular_cf: denominator must be positive");
    Rational x(r, s);
    CFWord w;
    w.flavor = CFFlavor::Regular;
    Int num = x.num, den = x.den;
    while (true) {
        Int a = floor_div(num, den);
        w.coeffs.push_back(static_cast<std::int64_t>(a));
        Int rem = num - a * den;
        if (rem == 0) break;
        num = den;
        den = rem;
    }
    if (w.coeffs.size() % 2 != 0) {
        // Rewrite the tail to reach the canonical even length.
        std::int64_t last = w.coeffs.back();
        if (last > 1 || w.coeffs.size() == 1) {
            w.coeffs.back() = last - 1;
            w.coeffs.push_back(1);
        } else {
            w.coeffs.pop_back();
            w.coeffs.back() += 1;
        }
    }
    return w;
}

CFWord negative_cf(const Int& r, const Int& s) {
    if (s <= 0) throw std::domain_error("negative_cf: denominator must be positive");
    Rational x(r, s);
    CFWord w;
    w.flavor = CFFlavor::Negative;
    Int num = x.num, den = x.den;
    while (true) {
        Int c = ceil_div(num, den);
        w.coeffs.push_back(static_cast<std::int64_t>(c));
        Int rem = c * den - num;  // c - x in [0, 1)
        if (rem == 0) break;
        num = den;
        den = rem;
    }
    return w;
}

Rational eval_cf_classical(const CFWord& w) {
    if (w.coeffs.empty()) throw std::domain_error("eval_cf_classical: empty word");
    // Evaluate the nest from the tail; value = coeff ± 1/tail.
    Int num = w.coeffs.back(), den = 1;
    const int step = w.flavor == CFFlavor::Regular ? 1 : -1;
    for (std::size_t i = w.coeffs.size() - 1; i-- > 0;) {
        if (num == 0) throw std::domain_error("ill-defined word");
        // next = c + step/(num/den) = (c*num + step*den)/num
        Int n2 = Int(w.coeffs[i]) * num + step * den;
        den = num;
        num = std::move(n2);
    }
    return Rational(num, den);
}

Rational parse_fraction(std::string_view text) {
    std::string s(text);
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s), 1);
        return Rational(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("cannot parse fraction '" + s + "'");
    }
}

CFWord parse_cf_word(std::string_view text) {
    std::string s(text);
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    s = s.substr(a, b - a);
    CFWord w;
    if (s.size() >= 4 && s.substr(0, 2) == "[[" && s.substr(s.size() - 2) == "]]") {
        w.flavor = CFFlavor::Negative;
        s = s.substr(2, s.size() - 4);
    } else if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
        w.flavor = CFFlavor::Regular;
        s = s.substr(1, s.size() - 2);
    } else {
        throw std::invalid_argument("cannot parse continued-fraction word '" + s + "'");
    }
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            w.coeffs.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad coefficient '" + item + "' in word");
        }
    }
    if (w.coeffs.empty())
        throw std::invalid_argument("empty continued-fraction word");
    return w;
}

}  // namespace qdeform
