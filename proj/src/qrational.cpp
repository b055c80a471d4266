#include "qdeform/qrational.hpp"

#include <sstream>

namespace qdeform {

namespace {

CanonicalQRational from_unit_ratfn(const QUnit& u, const RatFn& f) {
    CanonicalQRational v;
    if (f.num.is_zero()) return v;
    v.sign = u.sign;
    v.n = -u.exp;
    v.R = f.num;
    v.S = f.den;
    return v;
}

std::pair<QUnit, RatFn> first_column_value(const QMat2& m) {
    if (m.c.is_zero()) throw std::domain_error("ill-defined word");
    return ratfn_make(m.a, m.c, /*assume_coprime=*/true);
}

}  // namespace

QSeries CanonicalQRational::series(std::int64_t order) const {
    return series_expand(unit(), RatFn{R, S}, order);
}

std::string CanonicalQRational::str(bool compact) const {
    if (is_zero()) return "0";
    return ratfn_str(unit(), RatFn{R, S}, compact);
}

CanonicalQRational q_rational(const Int& r, const Int& s) {
    if (s <= 0) throw std::domain_error("q_rational: denominator must be positive");
    return q_rational(Rational(r, s));
}

CanonicalQRational q_rational(const Rational& x) {
    if (x.num == 0) return CanonicalQRational{};
    const CFWord w = negative_cf(x.num, x.den);
    auto [u, f] = first_column_value(m_neg_word(w.coeffs));
    return from_unit_ratfn(u, f);
}

std::pair<QUnit, RatFn> eval_regular_cf_q(const CFWord& w) {
    if (w.flavor != CFFlavor::Regular)
        throw std::invalid_argument("eval_regular_cf_q: wrong flavor");
    if (w.coeffs.size() % 2 != 0)
        throw std::invalid_argument("eval_regular_cf_q: odd-length word");
    return first_column_value(m_pos_word(w.coeffs));
}

std::pair<QUnit, RatFn> eval_negative_cf_q(const CFWord& w) {
    if (w.flavor != CFFlavor::Negative)
        throw std::invalid_argument("eval_negative_cf_q: wrong flavor");
    return first_column_value(m_neg_word(w.coeffs));
}

CanonicalQRational q_shift(const CanonicalQRational& x, std::int64_t n) {
    // q^n * sign q^{-N} R/S + [n]_q, over the common denominator S.
    LaurentPoly num = x.unit().apply(x.R).shifted(n) + q_int(n) * x.S;
    auto [u, f] = ratfn_make(num, x.S);
    return from_unit_ratfn(u, f);
}

CanonicalQRational q_transform(const CanonicalQRational& x, Transform t) {
    if (x.is_zero()) {
        if (t == Transform::Invert)
            throw std::domain_error("q_transform: cannot invert zero");
        return x;
    }
    const LaurentPoly num_rev = x.unit().reversed().apply(x.R.reversed());
    const LaurentPoly den_rev = x.S.reversed();
    std::pair<QUnit, RatFn> made =
        t == Transform::Negate
            ? ratfn_make(-num_rev.shifted(-1), den_rev, true)
            : ratfn_make(den_rev, num_rev, true);
    return from_unit_ratfn(made.first, made.second);
}

namespace {

struct ConvergentTracker {
    QMat2 m = QMat2::identity();
    std::int64_t det_exp = 0;      // |det| = q^{det_exp}
    std::optional<std::int64_t> prev_den_val;
    int stable_streak = 0;

    // Returns the valuation of the difference between the previous and the
    // new convergent, when both denominators are nonzero.
    std::optional<std::int64_t> step(const QMat2& bracket, std::int64_t bracket_det_exp) {
        std::optional<std::int64_t> diff_val;
        const std::optional<std::int64_t> den_val =
            m.c.is_zero() ? std::nullopt : std::optional(m.c.min_deg());
        m = m * bracket;
        const std::optional<std::int64_t> new_den_val =
            m.c.is_zero() ? std::nullopt : std::optional(m.c.min_deg());
        // x_{n+1} - x_n = -det(M_n) / (S_n S_{n+1}).
        if (den_val && new_den_val) diff_val = det_exp - *den_val - *new_den_val;
        det_exp += bracket_det_exp;
        prev_den_val = new_den_val;
        return diff_val;
    }
};

}  // namespace

QSeries q_series_from_cf(CFFlavor flavor, const CFCoeffStream& next, std::int64_t order) {
    ConvergentTracker tr;
    bool first = true;
    while (true) {
        QMat2 bracket;
        std::int64_t bracket_det = 0;
        if (flavor == CFFlavor::Negative) {
            auto c = next();
            if (!c) break;
            bracket = neg_bracket(*c);
            bracket_det = *c - 1;
        } else {
            auto a1 = next();
            if (!a1) break;
            auto a2 = next();
            if (!a2)
                throw std::invalid_argument("q_series_from_cf: odd-length regular stream");
            const std::int64_t pair[2] = {*a1, *a2};
            bracket = m_pos_word(pair);
            bracket_det = *a1 - *a2;
        }
        auto diff_val = tr.step(bracket, bracket_det);
        if (!first && diff_val && *diff_val > order) {
            if (++tr.stable_streak >= 2) break;
        } else {
            tr.stable_streak = 0;
        }
        first = false;
    }
    if (tr.m == QMat2::identity())
        throw std::domain_error("q_series_from_cf: empty stream");
    auto [u, f] = first_column_value(tr.m);
    return series_expand(u, f, order);
}

QSeries q_series_from_cf(const CFWord& w, std::int64_t order) {
    std::size_t i = 0;
    return q_series_from_cf(
        w.flavor,
        [&]() -> std::optional<std::int64_t> {
            if (i >= w.coeffs.size()) return std::nullopt;
            return w.coeffs[i++];
        },
        order);
}

}  // namespace qdeform
