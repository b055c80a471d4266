#pragma once

#include "qdeform/qmat.hpp"
#include "qdeform/surd.hpp"

#include <span>
#include <string>

namespace qdeform {

// Coefficients of the fixed-point equation A X^2 - B X + C = 0 attached to a
// period word.
struct QuadCoeffs {
    LaurentPoly A, B, C;
};

// A = E_{k-1}(c_2..c_k), B = E_k(c_1..c_k) + q^{c_k-1} E_{k-2}(c_2..c_{k-1}),
// C = q^{c_k-1} E_{k-1}(c_1..c_{k-1}).
QuadCoeffs abc(std::span<const std::int64_t> word);

// Closed form (R + branch*sqrt(P))/S of a q-deformed quadratic irrational.
// The branch selects the root whose q = 1 specialization
// (R(1) + branch*sqrt(P(1)))/S(1) is the represented number.
struct QSurd {
    LaurentPoly R, P, S;
    int branch = 1;

    // Classical value at q = 1.
    Surd classical() const;
    std::string str() const;
};

// Purely periodic closed form: P = Tr^2 - 4 q^{sum(c_i - 1)},
// R = E_k + q^{c_k-1} E_{k-2}(c_2..c_{k-1}), S = 2 E_{k-1}(c_2..c_k).
// Requires a hyperbolic word (trace at q = 1 above 2).
QSurd prs(std::span<const std::int64_t> word);

// Trace of M(c_1..c_k) at q = 1; the word is hyperbolic when this exceeds 2.
Int classical_trace(std::span<const std::int64_t> word);

// Möbius image (a y + b)/(c y + d), rationalized and canonicalized.
QSurd mobius_apply_qsurd(const QMat2& m, const QSurd& y);

// Full pipeline: periodic expansion, closed form of the period, transport
// across the preperiod, canonicalization, branch selection at q = 1.
QSurd q_quadratic(const Surd& x);

QSeries qsurd_series(const QSurd& y, std::int64_t order);

// E_{k-1}(c_2..c_k) q^{c_k-1} E_{k-1}(c_1..c_{k-1})
//   - E_k(c_1..c_k) q^{c_k-1} E_{k-2}(c_2..c_{k-1}) = q^{sum(c_i-1)}.
bool desnanot_jacobi_check(std::span<const std::int64_t> word);

// Structural equality of canonical triples, with a fallback through the
// reduced quadratic equation plus series agreement to order 20.
bool qsurd_equal(const QSurd& x, const QSurd& y);

}  // namespace qdeform
