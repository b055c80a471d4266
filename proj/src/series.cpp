#include "qdeform/series.hpp"

#include <algorithm>
#include <sstream>

namespace qdeform {

namespace {
const Int kZero = 0;

std::int64_t sat_min(std::int64_t a, std::int64_t b) { return a < b ? a : b; }
}  // namespace

QSeries::QSeries(const LaurentPoly& p, std::int64_t order) : order_(order) {
    for (const auto& t : p.terms())
        if (t.first <= order_) terms_.push_back(t);
}

QSeries QSeries::from_terms(std::vector<Term> terms, std::int64_t order) {
    QSeries s;
    s.order_ = order;
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.first < y.first; });
    for (auto& t : terms)
        if (t.second != 0 && t.first <= order) s.terms_.push_back(std::move(t));
    return s;
}

const Int& QSeries::coeff(std::int64_t exp) const {
    if (exp > order_)
        throw std::domain_error("QSeries: coefficient requested above truncation order");
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exp,
                               [](const Term& t, std::int64_t e) { return t.first < e; });
    if (it != terms_.end() && it->first == exp) return it->second;
    return kZero;
}

std::optional<std::int64_t> QSeries::valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first;
}

std::int64_t QSeries::val_floor() const {
    if (!terms_.empty()) return terms_.front().first;
    return order_ >= kExactOrder ? kExactOrder : order_ + 1;
}

QSeries QSeries::truncated(std::int64_t order) const {
    QSeries s;
    s.order_ = sat_min(order_, order);
    for (const auto& t : terms_)
        if (t.first <= s.order_) s.terms_.push_back(t);
    return s;
}

QSeries QSeries::shifted(std::int64_t n) const {
    QSeries s(*this);
    if (s.order_ < kExactOrder) s.order_ += n;
    for (auto& t : s.terms_) t.first += n;
    return s;
}

QSeries QSeries::scaled(const Int& k) const {
    QSeries s;
    s.order_ = order_;
    if (k == 0) return s;
    s.terms_ = terms_;
    for (auto& t : s.terms_) t.second *= k;
    return s;
}

QSeries QSeries::operator-() const { return scaled(-1); }

QSeries operator+(const QSeries& a, const QSeries& b) {
    QSeries s;
    s.order_ = sat_min(a.order_, b.order_);
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
        std::int64_t e;
        Int c;
        if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
            e = i->first;
            c = i->second;
            ++i;
        } else if (i == a.terms_.end() || j->first < i->first) {
            e = j->first;
            c = j->second;
            ++j;
        } else {
            e = i->first;
            c = i->second + j->second;
            ++i;
            ++j;
        }
        if (e <= s.order_ && c != 0) s.terms_.emplace_back(e, std::move(c));
    }
    return s;
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
    QSeries s;
    if (a.order_ >= QSeries::kExactOrder && b.order_ >= QSeries::kExactOrder)
        s.order_ = QSeries::kExactOrder;
    else
        s.order_ = sat_min(a.order_ + b.val_floor(), b.order_ + a.val_floor());
    if (a.terms_.empty() || b.terms_.empty()) return s;
    const std::int64_t lo = a.terms_.front().first + b.terms_.front().first;
    const std::int64_t hi =
        sat_min(a.terms_.back().first + b.terms_.back().first, s.order_);
    if (hi < lo) return s;
    std::vector<Int> dense(static_cast<std::size_t>(hi - lo + 1));
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) {
            const std::int64_t e = ta.first + tb.first;
            if (e > hi) break;
            dense[static_cast<std::size_t>(e - lo)] += ta.second * tb.second;
        }
    std::vector<QSeries::Term> terms;
    for (std::size_t k = 0; k < dense.size(); ++k)
        if (dense[k] != 0)
            terms.emplace_back(lo + static_cast<std::int64_t>(k), std::move(dense[k]));
    s.terms_ = std::move(terms);
    return s;
}

QSeries series_inverse(const QSeries& g, std::int64_t order) {
    auto val = g.valuation();
    if (!val)
        throw std::domain_error("series_inverse: series is zero through its order");
    const std::int64_t v = *val;
    const Int& lead = g.coeff(v);
    if (lead != 1 && lead != -1)
        throw std::domain_error("series_inverse: lowest coefficient is not a unit");
    const int u = lead == 1 ? 1 : -1;

    std::int64_t sound = order;
    if (g.order() < QSeries::kExactOrder) sound = sat_min(sound, g.order() - 2 * v);
    const std::int64_t n_max = sound + v;  // compute t_0..t_{n_max}
    QSeries s;
    if (n_max < 0) return QSeries(LaurentPoly(), sound);

    // g = u q^v (1 + h); (1+h)^{-1} by the standard recurrence.
    std::vector<Int> h(static_cast<std::size_t>(n_max) + 1);
    for (const auto& t : g.terms()) {
        const std::int64_t k = t.first - v;
        if (k >= 1 && k <= n_max) h[static_cast<std::size_t>(k)] = u > 0 ? t.second : -t.second;
    }
    std::vector<Int> t(static_cast<std::size_t>(n_max) + 1);
    t[0] = 1;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        Int acc = 0;
        for (std::int64_t k = 1; k <= n; ++k)
            if (h[static_cast<std::size_t>(k)] != 0)
                acc += h[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(n - k)];
        t[static_cast<std::size_t>(n)] = -acc;
    }
    std::vector<QSeries::Term> terms;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        Int c = u > 0 ? t[static_cast<std::size_t>(n)] : -t[static_cast<std::size_t>(n)];
        if (c != 0) terms.emplace_back(n - v, std::move(c));
    }
    return QSeries::from_terms(std::move(terms), sound);
}

QSeries series_div(const QSeries& a, const QSeries& b, std::int64_t order) {
    const std::int64_t va = a.valuation().value_or(
        a.order() >= QSeries::kExactOrder ? 0 : a.order() + 1);
    QSeries inv = series_inverse(b, order - std::min<std::int64_t>(va, 0) + 1);
    return (a * inv).truncated(order);
}

QSeries series_div_exact(const QSeries& a, const LaurentPoly& den, std::int64_t order) {
    if (den.is_zero()) throw std::domain_error("series_div_exact: zero denominator");
    const std::int64_t vd = den.min_deg();
    const Int& lead = den.coeff(vd);
    const std::int64_t sound =
        a.order() >= QSeries::kExactOrder ? order : sat_min(order, a.order() - vd);
    auto va = a.valuation();
    if (!va) return QSeries(LaurentPoly(), sound);
    const std::int64_t base = *va - vd;
    const std::int64_t n_max = sound - base;
    if (n_max < 0) return QSeries(LaurentPoly(), sound);

    std::vector<Int> t(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        Int acc = a.coeff(*va + n);
        for (const auto& [e, c] : den.terms()) {
            const std::int64_t k = e - vd;
            if (k >= 1 && k <= n) acc -= c * t[static_cast<std::size_t>(n - k)];
        }
        if (acc % lead != 0)
            throw std::domain_error("series_div_exact: non-integer coefficient");
        t[static_cast<std::size_t>(n)] = acc / lead;
    }
    std::vector<QSeries::Term> terms;
    for (std::int64_t n = 0; n <= n_max; ++n)
        if (t[static_cast<std::size_t>(n)] != 0)
            terms.emplace_back(base + n, std::move(t[static_cast<std::size_t>(n)]));
    return QSeries::from_terms(std::move(terms), sound);
}

QSeries series_expand(const QUnit& unit, const RatFn& f, std::int64_t order) {
    if (f.num.is_zero()) return QSeries(LaurentPoly(), order);
    if (f.den.is_zero()) throw std::domain_error("series_expand: zero denominator");
    const std::int64_t vd = f.den.min_deg();
    const Int& lead = f.den.coeff(vd);
    if (lead != 1 && lead != -1)
        throw std::domain_error("series_expand: lowest denominator coefficient is not a unit");

    const std::int64_t n_max = order - unit.exp - (f.num.min_deg() - vd);
    if (n_max < 0) return QSeries(LaurentPoly(), order);
    std::vector<Int> den(static_cast<std::size_t>(n_max) + 1);
    for (const auto& [e, c] : f.den.terms()) {
        const std::int64_t k = e - vd;
        if (k <= n_max) den[static_cast<std::size_t>(k)] = c;
    }
    std::vector<Int> t(static_cast<std::size_t>(n_max) + 1);
    for (std::int64_t n = 0; n <= n_max; ++n) {
        Int acc = f.num.coeff(f.num.min_deg() + n);
        for (std::int64_t k = 1; k <= n; ++k)
            if (den[static_cast<std::size_t>(k)] != 0)
                acc -= den[static_cast<std::size_t>(k)] * t[static_cast<std::size_t>(n - k)];
        t[static_cast<std::size_t>(n)] = lead == 1 ? acc : Int(-acc);
    }
    std::vector<QSeries::Term> terms;
    const std::int64_t base = unit.exp + f.num.min_deg() - vd;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        Int c = unit.sign > 0 ? t[static_cast<std::size_t>(n)]
                              : Int(-t[static_cast<std::size_t>(n)]);
        if (c != 0) terms.emplace_back(base + n, std::move(c));
    }
    return QSeries::from_terms(std::move(terms), order);
}

QSeries series_sqrt(const LaurentPoly& p, std::int64_t order) {
    if (p.is_zero()) return QSeries(LaurentPoly(), order);
    const std::int64_t v = p.min_deg();
    if (v % 2 != 0) throw std::domain_error("series_sqrt: odd valuation");
    const Int& c0 = p.coeff(v);
    if (c0 < 0 || !is_square(c0))
        throw std::domain_error("series_sqrt: lowest coefficient is not a perfect square");
    const Int m = isqrt(c0);
    const Int two_m = 2 * m;

    const std::int64_t half = v / 2;
    const std::int64_t n_max = order - half;
    if (n_max < 0) return QSeries(LaurentPoly(), order);
    std::vector<Int> s(static_cast<std::size_t>(n_max) + 1);
    s[0] = m;
    for (std::int64_t n = 1; n <= n_max; ++n) {
        Int acc = p.coeff(v + n);
        for (std::int64_t k = 1; k < n; ++k)
            acc -= s[static_cast<std::size_t>(k)] * s[static_cast<std::size_t>(n - k)];
        if (acc % two_m != 0)
            throw std::domain_error("series_sqrt: no integer-coefficient square root");
        s[static_cast<std::size_t>(n)] = acc / two_m;
    }
    std::vector<QSeries::Term> terms;
    for (std::int64_t n = 0; n <= n_max; ++n)
        if (s[static_cast<std::size_t>(n)] != 0)
            terms.emplace_back(half + n, std::move(s[static_cast<std::size_t>(n)]));
    return QSeries::from_terms(std::move(terms), order);
}

bool agree_through(const QSeries& a, const QSeries& b, std::int64_t order) {
    if (a.order() < order || b.order() < order)
        throw std::domain_error("agree_through: series not sound through requested order");
    auto i = a.terms().begin();
    auto j = b.terms().begin();
    while (true) {
        while (i != a.terms().end() && i->first > order) ++i;
        while (j != b.terms().end() && j->first > order) ++j;
        const bool ei = i == a.terms().end() || i->first > order;
        const bool ej = j == b.terms().end() || j->first > order;
        if (ei || ej) return ei && ej;
        if (i->first != j->first || i->second != j->second) return false;
        ++i;
        ++j;
    }
}

std::string QSeries::str() const {
    std::ostringstream os;
    LaurentPoly p = LaurentPoly::from_terms(terms_);
    os << p.str();
    if (order_ < kExactOrder) os << " + O(q^" << order_ + 1 << ")";
    return os.str();
}

}  // namespace qdeform
