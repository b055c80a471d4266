#include "qdeform/qmat.hpp"

#include <cctype>
#include <sstream>

namespace qdeform {

QMat2 QMat2::operator*(const QMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d,
            c * o.a + d * o.c, c * o.b + d * o.d};
}

QMat2 QMat2::scaled_by_unit(const QUnit& u) const {
    return {u.apply(a), u.apply(b), u.apply(c), u.apply(d)};
}

std::optional<QUnit> QMat2::det_unit() const {
    auto m = det().unit_monomial();
    if (!m) return std::nullopt;
    return QUnit{m->first, m->second};
}

std::array<Int, 4> QMat2::eval_one() const {
    return {a.eval_one(), b.eval_one(), c.eval_one(), d.eval_one()};
}

std::string QMat2::str() const {
    std::ostringstream os;
    os << "[[" << a.str_compact() << ", " << b.str_compact() << "], ["
       << c.str_compact() << ", " << d.str_compact() << "]]";
    return os.str();
}

QMat2 generator(Gen g) {
    switch (g) {
        case Gen::R:
            return {LaurentPoly::monomial(1, 1), LaurentPoly(1), {}, LaurentPoly(1)};
        case Gen::S:
            return {{}, LaurentPoly::monomial(-1, -1), LaurentPoly(1), {}};
        case Gen::L:
            return {LaurentPoly::monomial(1, 1), {}, LaurentPoly::monomial(1, 1),
                    LaurentPoly(1)};
    }
    throw std::logic_error("generator: bad tag");
}

QMat2 gen_power(Gen g, std::int64_t n) {
    if (n == 0) return QMat2::identity();
    switch (g) {
        case Gen::R:
            return {LaurentPoly::monomial(1, n), q_int(n), {}, LaurentPoly(1)};
        case Gen::L:
            return {LaurentPoly::monomial(1, n), {}, q_int(n).shifted(1), LaurentPoly(1)};
        case Gen::S: {
            const std::int64_t t = floor_div(n, 2).convert_to<std::int64_t>();
            const QUnit u{t % 2 != 0 ? -1 : 1, -t};
            if (n % 2 == 0) return QMat2::identity().scaled_by_unit(u);
            return generator(Gen::S).scaled_by_unit(u);
        }
    }
    throw std::logic_error("gen_power: bad tag");
}

GroupWord reduce_word(GroupWord w) {
    GroupWord out;
    for (const auto& l : w) {
        if (l.exp == 0) continue;
        if (!out.empty() && out.back().g == l.g) {
            out.back().exp += l.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return out;
}

std::string word_str(const GroupWord& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& l : w) {
        if (!first) os << " ";
        os << (l.g == Gen::R ? "R" : l.g == Gen::S ? "S" : "L");
        if (l.exp != 1) os << "^" << l.exp;
        first = false;
    }
    return os.str();
}

GroupWord parse_group_word(std::string_view text) {
    GroupWord w;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    while (i < text.size()) {
        char c = text[i];
        Gen g;
        if (c == 'R')
            g = Gen::R;
        else if (c == 'S')
            g = Gen::S;
        else if (c == 'L')
            g = Gen::L;
        else
            throw std::invalid_argument(std::string("bad generator '") + c + "' in word");
        ++i;
        std::int64_t e = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t start = i;
            if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw std::invalid_argument("missing exponent in word");
            e = std::stoll(std::string(text.substr(start, i - start)));
        }
        w.push_back({g, e});
        skip();
    }
    return reduce_word(std::move(w));
}

QMat2 q_deform_word_raw(const GroupWord& w) {
    QMat2 m = QMat2::identity();
    for (const auto& l : reduce_word(w)) m = m * gen_power(l.g, l.exp);
    return m;
}

ProjClass::ProjClass(const QMat2& m) : rep_(m) {
    const LaurentPoly* entries[4] = {&rep_.a, &rep_.b, &rep_.c, &rep_.d};
    std::int64_t shift = 0;
    bool found = false;
    for (const auto* e : entries)
        if (!e->is_zero()) {
            shift = found ? std::min(shift, e->min_deg()) : e->min_deg();
            found = true;
        }
    if (!found) throw std::domain_error("ProjClass: zero matrix");
    int sign = 1;
    for (const auto* e : entries)
        if (!e->is_zero()) {
            sign = e->terms().front().second > 0 ? 1 : -1;
            break;
        }
    rep_ = rep_.scaled_by_unit(QUnit{sign, -shift});
}

ProjClass q_deform_word(const GroupWord& w) { return ProjClass(q_deform_word_raw(w)); }

LaurentPoly trace_class(const QMat2& m) {
    LaurentPoly t = m.trace();
    if (t.is_zero()) return t;
    t = t.shifted(-t.min_deg());
    if (t.coeff(0) < 0) t = -t;
    return t;
}

GroupWord decompose_sl2(const IntMat2& m) {
    if (static_cast<Int>(m.a) * m.d - static_cast<Int>(m.b) * m.c != 1)
        throw std::domain_error("decompose_sl2: determinant must be +1");
    Int a = m.a, b = m.b, c = m.c, d = m.d;
    GroupWord w;
    while (c != 0) {
        if (a == 0) {
            // M = S * [[c, d], [0, -b]]
            w.push_back({Gen::S, 1});
            Int na = c, nb = d, nd = -b;
            a = na;
            b = nb;
            c = 0;
            d = nd;
            break;
        }
        if (abs_int(a) >= abs_int(c)) {
            Int n = floor_div(a, c);
            a -= n * c;
            b -= n * d;
            w.push_back({Gen::R, n.convert_to<std::int64_t>()});
        } else {
            Int n = floor_div(c, a);
            c -= n * a;
            d -= n * b;
            w.push_back({Gen::L, n.convert_to<std::int64_t>()});
        }
    }
    // Now a = d = ±1, c = 0; finish with the unipotent part, dropping the
    // projective sign.
    Int tail = a == 1 ? b : -b;
    w.push_back({Gen::R, tail.convert_to<std::int64_t>()});
    w = reduce_word(std::move(w));

    // Mandatory reconstruction check at q = 1.
    const auto r = q_deform_word_raw(w).eval_one();
    const bool plus = r[0] == m.a && r[1] == m.b && r[2] == m.c && r[3] == m.d;
    const bool minus = r[0] == -m.a && r[1] == -m.b && r[2] == -m.c && r[3] == -m.d;
    if (!plus && !minus)
        throw std::logic_error("decompose_sl2: reconstruction check failed");
    return w;
}

QMat2 neg_bracket(std::int64_t c) {
    return {q_int(c), LaurentPoly::monomial(-1, c - 1), LaurentPoly(1), {}};
}

QMat2 m_neg_word(std::span<const std::int64_t> c) {
    QMat2 m = QMat2::identity();
    for (std::int64_t ci : c) m = m * neg_bracket(ci);
    return m;
}

QMat2 m_pos_word(std::span<const std::int64_t> a) {
    if (a.size() % 2 != 0)
        throw std::invalid_argument("m_pos_word: word length must be even");
    QMat2 m = QMat2::identity();
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::int64_t ai = a[i];
        QMat2 br;
        if (i % 2 == 0)
            br = {q_int(ai), LaurentPoly::monomial(1, ai), LaurentPoly(1), {}};
        else
            br = {q_int(ai).reversed(), LaurentPoly::monomial(1, -ai), LaurentPoly(1), {}};
        m = m * br;
    }
    return m;
}

LaurentPoly continuant(std::span<const std::int64_t> c) { return m_neg_word(c).a; }

std::pair<QUnit, std::vector<std::int64_t>> word_reduce(std::vector<std::int64_t> c) {
    QUnit u;
    bool changed = true;
    while (changed && c.size() >= 3) {
        changed = false;
        for (std::size_t i = 1; i + 1 < c.size(); ++i) {
            if (c[i] == 1) {
                c[i - 1] -= 1;
                c[i + 1] -= 1;
                c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
                u = u * QUnit{1, 1};
                changed = true;
                break;
            }
            if (c[i] == -1) {
                c[i - 1] += 1;
                c[i + 1] += 1;
                c.erase(c.begin() + static_cast<std::ptrdiff_t>(i));
                u = u * QUnit{-1, -2};
                changed = true;
                break;
            }
        }
    }
    return {u, std::move(c)};
}

QSeries mobius_series(const QMat2& m, const QSeries& f, std::int64_t order) {
    const QSeries num = QSeries(m.a) * f + QSeries(m.b);
    const QSeries den = QSeries(m.c) * f + QSeries(m.d);
    if (!den.valuation())
        throw std::domain_error("mobius_series: denominator vanishes through the order");
    return series_div(num, den, order);
}

}  // namespace qdeform
