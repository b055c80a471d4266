#pragma once

#include "qdeform/cf.hpp"
#include "qdeform/qmat.hpp"

#include <functional>
#include <string>
#include <utility>

namespace qdeform {

// Canonical form of a q-rational: value = sign * q^{-n} * R/S with R, S
// coprime ordinary polynomials. For nonzero rationals both have positive
// coefficients with constant and leading coefficients 1, R(1) = |r| and
// S(1) = s. n is kept signed (it is negative for rationals in (0,1));
// reported_N clamps it to the classical nonnegative statement.
struct CanonicalQRational {
    int sign = 1;
    std::int64_t n = 0;
    LaurentPoly R;
    LaurentPoly S{1};

    bool is_zero() const { return R.is_zero(); }
    QUnit unit() const { return {sign, -n}; }
    std::int64_t reported_N() const { return n > 0 ? n : 0; }

    std::pair<QUnit, RatFn> to_ratfn() const { return {unit(), RatFn{R, S}}; }
    QSeries series(std::int64_t order) const;

    bool operator==(const CanonicalQRational& o) const {
        return sign == o.sign && n == o.n && R == o.R && S == o.S;
    }
    std::string str(bool compact = false) const;
};

// [r/s]_q in canonical form; the fraction is reduced internally, s > 0.
CanonicalQRational q_rational(const Int& r, const Int& s);
CanonicalQRational q_rational(const Rational& x);

// q-deformed evaluation of a regular word (any integers, even length) via the
// matrix product. Throws "ill-defined word" when the denominator vanishes.
std::pair<QUnit, RatFn> eval_regular_cf_q(const CFWord& w);
// Same for a negative-flavor word of any integers.
std::pair<QUnit, RatFn> eval_negative_cf_q(const CFWord& w);

enum class Transform { Negate, Invert };

// [x+n]_q = q^n [x]_q + [n]_q.
CanonicalQRational q_shift(const CanonicalQRational& x, std::int64_t n);
// [-x]_q = -q^{-1} [x]_{q^{-1}} and [1/x]_q = 1/[x]_{q^{-1}}; x must be
// nonzero for Invert.
CanonicalQRational q_transform(const CanonicalQRational& x, Transform t);

// Coefficient source for an infinite continued fraction; empty signals the
// end of the stream.
using CFCoeffStream = std::function<std::optional<std::int64_t>()>;

// Series of the number defined by a (possibly infinite) continued-fraction
// stream, exact through `order`. Convergents are accumulated until the
// q-valuation of two consecutive convergent differences exceeds the order
// (guard band 2), tracked exactly via determinant and denominator valuations.
// A stream that ends early is treated as an exact rational word.
QSeries q_series_from_cf(CFFlavor flavor, const CFCoeffStream& next, std::int64_t order);
QSeries q_series_from_cf(const CFWord& w, std::int64_t order);

}  // namespace qdeform
