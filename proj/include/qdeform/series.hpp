#pragma once

#include "qdeform/ratfn.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdeform {

// Truncated Laurent series: coefficients are exact for every exponent <= order.
// Reading a coefficient above the order throws; it is never a silent zero.
// Every operation computes the tightest sound order for its result.
class QSeries {
public:
    using Term = LaurentPoly::Term;

    // Sentinel for series known exactly at all orders (polynomials).
    static constexpr std::int64_t kExactOrder = INT64_MAX / 4;

    QSeries() = default;  // zero, exact
    explicit QSeries(const LaurentPoly& p, std::int64_t order = kExactOrder);

    std::int64_t order() const { return order_; }
    const std::vector<Term>& terms() const { return terms_; }
    const Int& coeff(std::int64_t exp) const;  // throws above order
    bool known_zero() const { return terms_.empty(); }
    // Valuation of the known part; empty when zero through the order.
    std::optional<std::int64_t> valuation() const;

    QSeries truncated(std::int64_t order) const;
    QSeries shifted(std::int64_t n) const;
    QSeries scaled(const Int& k) const;
    QSeries operator-() const;

    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);

    // Structural comparison (same order, same known terms).
    bool operator==(const QSeries& o) const {
        return order_ == o.order_ && terms_ == o.terms_;
    }

    std::string str() const;

    static QSeries from_terms(std::vector<Term> terms, std::int64_t order);

private:
    std::vector<Term> terms_;  // ascending exponents <= order_, nonzero
    std::int64_t order_ = kExactOrder;
    // Lower bound for the valuation of the full series.
    std::int64_t val_floor() const;
    friend QSeries series_inverse(const QSeries&, std::int64_t);
};

// Reciprocal, sound through min(order, g.order() - 2*val(g)). The lowest known
// coefficient of g must be ±1.
QSeries series_inverse(const QSeries& g, std::int64_t order);

QSeries series_div(const QSeries& a, const QSeries& b, std::int64_t order);

// Division by a polynomial whose lowest coefficient need not be a unit; each
// coefficient step must divide exactly over the integers (throws otherwise).
QSeries series_div_exact(const QSeries& a, const LaurentPoly& den, std::int64_t order);

// Laurent expansion of unit * num/den through `order`. The denominator's
// constant coefficient must be ±1.
QSeries series_expand(const QUnit& unit, const RatFn& f, std::int64_t order);

// Square root with positive lowest coefficient, exact through `order`.
// Requires even valuation, a perfect-square lowest coefficient, and integer
// coefficients all the way (throws otherwise).
QSeries series_sqrt(const LaurentPoly& p, std::int64_t order);

// Both series must be sound through `order`.
bool agree_through(const QSeries& a, const QSeries& b, std::int64_t order);

}  // namespace qdeform
