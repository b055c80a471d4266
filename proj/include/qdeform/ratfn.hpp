#pragma once

#include "qdeform/laurent.hpp"

#include <string>
#include <utility>

namespace qdeform {

// A unit of Z[q^{±1}]: sign * q^exp.
struct QUnit {
    int sign = 1;
    std::int64_t exp = 0;

    QUnit operator*(const QUnit& o) const { return {sign * o.sign, exp + o.exp}; }
    QUnit inverse() const { return {sign, -exp}; }
    QUnit reversed() const { return {sign, -exp}; }  // q -> q^{-1}
    bool operator==(const QUnit& o) const { return sign == o.sign && exp == o.exp; }
    bool operator!=(const QUnit& o) const { return !(*this == o); }

    LaurentPoly apply(const LaurentPoly& p) const {
        return (sign < 0 ? -p : p).shifted(exp);
    }
    LaurentPoly to_poly() const { return LaurentPoly::monomial(sign, exp); }
    std::string str() const;
};

// Reduced fraction of ordinary polynomials. Both num and den have nonzero
// constant terms and positive lowest coefficients; the overall sign and
// q-power live in the accompanying QUnit.
struct RatFn {
    LaurentPoly num;
    LaurentPoly den;
};

// Factors num/den as unit * (N/D) in the canonical shape above. The common
// integer content and, unless assume_coprime is set, the polynomial gcd are
// removed. assume_coprime is safe for fractions coming from unit-determinant
// matrix columns. Throws on den = 0.
std::pair<QUnit, RatFn> ratfn_make(const LaurentPoly& num, const LaurentPoly& den,
                                   bool assume_coprime = false);

std::string ratfn_str(const QUnit& u, const RatFn& f, bool compact = false);

}  // namespace qdeform
