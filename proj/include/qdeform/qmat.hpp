#pragma once

#include "qdeform/series.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qdeform {

// 2x2 matrix over Z[q^{±1}] with unit determinant ±q^k.
struct QMat2 {
    LaurentPoly a, b, c, d;

    static QMat2 identity() { return {LaurentPoly(1), {}, {}, LaurentPoly(1)}; }

    QMat2 operator*(const QMat2& o) const;
    bool operator==(const QMat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    bool operator!=(const QMat2& o) const { return !(*this == o); }

    QMat2 scaled_by_unit(const QUnit& u) const;
    QMat2 reversed() const { return {a.reversed(), b.reversed(), c.reversed(), d.reversed()}; }
    QMat2 transposed() const { return {a, c, b, d}; }

    LaurentPoly trace() const { return a + d; }
    LaurentPoly det() const { return a * d - b * c; }
    // Determinant as a unit; empty when the matrix is not in GL(2, Z[q^{±1}]).
    std::optional<QUnit> det_unit() const;

    std::array<Int, 4> eval_one() const;  // specialize q = 1

    std::string str() const;
};

// Generators of the q-deformed modular group.
enum class Gen { R, S, L };

QMat2 generator(Gen g);
// Closed-form n-th power of a deformed generator, any integer n.
QMat2 gen_power(Gen g, std::int64_t n);

struct GroupLetter {
    Gen g;
    std::int64_t exp;
    bool operator==(const GroupLetter& o) const { return g == o.g && exp == o.exp; }
};

// Word in the generators; reduced form merges adjacent equal letters and
// drops zero exponents.
using GroupWord = std::vector<GroupLetter>;

GroupWord reduce_word(GroupWord w);
std::string word_str(const GroupWord& w);
// Accepts "R^2 S L^-1" style text.
GroupWord parse_group_word(std::string_view text);

// Representative in GL(2, Z[q^{±1}]) of the deformed word.
QMat2 q_deform_word_raw(const GroupWord& w);

// Projective class modulo {±q^N Id}: the representative has its minimal
// entry exponent at 0 and the lowest coefficient of the first nonzero entry
// positive, which makes class equality structural.
class ProjClass {
public:
    explicit ProjClass(const QMat2& m);
    const QMat2& rep() const { return rep_; }
    bool operator==(const ProjClass& o) const { return rep_ == o.rep_; }
    bool operator!=(const ProjClass& o) const { return !(*this == o); }
    bool is_identity() const { return rep_ == QMat2::identity(); }

private:
    QMat2 rep_;
};

ProjClass q_deform_word(const GroupWord& w);

// Trace normalized modulo ±q^N: minimal exponent 0, lowest coefficient > 0.
LaurentPoly trace_class(const QMat2& m);

// Integer matrix with determinant +1.
struct IntMat2 {
    std::int64_t a, b, c, d;
};

// Word in R, L, S evaluating to ±M in PSL(2, Z), found by Euclidean
// reduction of the first column. The reconstruction at q = 1 is verified
// before returning.
GroupWord decompose_sl2(const IntMat2& m);

// Single negative-flavor bracket [[ [c]_q, -q^{c-1} ], [1, 0]].
QMat2 neg_bracket(std::int64_t c);
// M_q(c_1..c_k); empty word gives the identity.
QMat2 m_neg_word(std::span<const std::int64_t> c);
// M^+_q(a_1..a_2m); throws on odd length.
QMat2 m_pos_word(std::span<const std::int64_t> a);

// q-continuant E_k(c_1..c_k); E_0() = 1.
LaurentPoly continuant(std::span<const std::int64_t> c);

// Applies the interior reduction rules
//   (c, 1, d)  -> q     * (c-1, d-1)
//   (c, -1, d) -> -q^-2 * (c+1, d+1)
// to a fixed point, keeping end positions intact. Returns the accumulated
// unit u with m_neg_word(input) == u * m_neg_word(output).
std::pair<QUnit, std::vector<std::int64_t>> word_reduce(std::vector<std::int64_t> c);

// Möbius action (a f + b)/(c f + d) on series, exact through the sound order
// (at most `order`). Throws when the denominator's lowest known coefficient
// is not a unit.
QSeries mobius_series(const QMat2& m, const QSeries& f, std::int64_t order);

}  // namespace qdeform
