#include "qdeform/ratfn.hpp"

#include <sstream>

namespace qdeform {

std::string QUnit::str() const {
    std::ostringstream os;
    if (sign < 0) os << "-";
    if (exp == 0)
        os << "1";
    else if (exp == 1)
        os << "q";
    else
        os << "q^" << exp;
    return os.str();
}

std::pair<QUnit, RatFn> ratfn_make(const LaurentPoly& num, const LaurentPoly& den,
                                   bool assume_coprime) {
    if (den.is_zero()) throw std::domain_error("ratfn_make: zero denominator");

    QUnit unit;
    RatFn f;
    f.den = den.shifted(-den.min_deg());
    unit.exp = -den.min_deg();
    if (f.den.coeff(0) < 0) {
        f.den = -f.den;
        unit.sign = -unit.sign;
    }
    if (num.is_zero()) {
        f.num = LaurentPoly();
        f.den = LaurentPoly(1);
        return {QUnit{}, f};
    }
    f.num = num.shifted(-num.min_deg());
    unit.exp += num.min_deg();
    if (f.num.coeff(0) < 0) {
        f.num = -f.num;
        unit.sign = -unit.sign;
    }

    const Int c = gcd_int(poly_content(f.num), poly_content(f.den));
    if (c > 1) {
        f.num = *exact_divide(f.num, LaurentPoly(c));
        f.den = *exact_divide(f.den, LaurentPoly(c));
    }
    if (!assume_coprime) {
        LaurentPoly g = poly_gcd(f.num, f.den);
        if (!g.is_one() && !g.is_zero()) {
            f.num = *exact_divide(f.num, g);
            f.den = *exact_divide(f.den, g);
            // The gcd is sign-normalized, not constant-term-normalized;
            // restore positive lowest coefficients.
            if (f.den.coeff(0) < 0) {
                f.den = -f.den;
                f.num = -f.num;
            }
            if (f.num.coeff(0) < 0) {
                f.num = -f.num;
                unit.sign = -unit.sign;
            }
        }
    }
    return {unit, f};
}

std::string ratfn_str(const QUnit& u, const RatFn& f, bool compact) {
    std::ostringstream os;
    if (f.num.is_zero()) return "0";
    if (u.sign < 0 || u.exp != 0) os << u.str() << " * ";
    const std::string n = compact ? f.num.str_compact() : f.num.str();
    const std::string d = compact ? f.den.str_compact() : f.den.str();
    os << "(" << n << ")/(" << d << ")";
    return os.str();
}

}  // namespace qdeform
