#include "qdeform/qsurd.hpp"

#include <sstream>

namespace qdeform {

namespace {

std::vector<std::int64_t> slice(std::span<const std::int64_t> w, std::size_t from,
                                std::size_t to) {
    return std::vector<std::int64_t>(w.begin() + static_cast<std::ptrdiff_t>(from),
                                     w.begin() + static_cast<std::ptrdiff_t>(to));
}

// E_{k-2}(c_2..c_{k-1}); for k = 1 this is E_{-1}() = 0.
LaurentPoly continuant_inner(std::span<const std::int64_t> w) {
    if (w.size() < 2) return LaurentPoly();
    return continuant(slice(w, 1, w.size() - 1));
}

// Monic quadratic data (A2, A1, A0) for A2 x^2 + A1 x + A0 = 0, reduced to a
// coprime triple of ordinary polynomials with positive leading coefficient
// on A2.
struct Equation {
    LaurentPoly a2, a1, a0;

    void reduce() {
        // Strip the common q-power.
        std::int64_t v = 0;
        bool any = false;
        for (const LaurentPoly* p : {&a2, &a1, &a0})
            if (!p->is_zero()) {
                v = any ? std::min(v, p->min_deg()) : p->min_deg();
                any = true;
            }
        if (!any) throw std::domain_error("Equation: zero equation");
        a2 = a2.shifted(-v);
        a1 = a1.shifted(-v);
        a0 = a0.shifted(-v);
        LaurentPoly g = poly_gcd(poly_gcd(a2, a1), a0);
        if (!g.is_zero() && !g.is_one()) {
            a2 = *exact_divide(a2, g);
            a1 = *exact_divide(a1, g);
            a0 = *exact_divide(a0, g);
        }
        if (!a2.is_zero() && a2.terms().back().second < 0) {
            a2 = -a2;
            a1 = -a1;
            a0 = -a0;
        }
    }
};

// Equation satisfied by (R + branch sqrt(P))/S: S^2 x^2 - 2RS x + (R^2 - P) = 0.
Equation equation_of(const QSurd& y) {
    return {y.S * y.S, (y.R * y.S).scaled(-2), y.R * y.R - y.P};
}

// Substitutes x = N·y into y's equation, i.e. rewrites the equation for
// x where y = N^{-1} x = (delta x - beta)/(-gamma x + alpha).
Equation transport(const Equation& eq, const QMat2& n) {
    const LaurentPoly &al = n.a, &be = n.b, &ga = n.c, &de = n.d;
    Equation out;
    out.a2 = eq.a2 * de * de - eq.a1 * de * ga + eq.a0 * ga * ga;
    out.a1 = eq.a2 * be * de * LaurentPoly(-2) + eq.a1 * (al * de + be * ga) -
             eq.a0 * al * ga * LaurentPoly(2);
    out.a0 = eq.a2 * be * be - eq.a1 * al * be + eq.a0 * al * al;
    return out;
}

// Canonical (R, P, S) from a reduced equation, with the branch fixed by the
// exact classical value.
QSurd resolve(Equation eq, const Surd& value) {
    eq.reduce();
    QSurd y;
    y.R = -eq.a1;
    y.S = eq.a2.scaled(2);
    y.P = eq.a1 * eq.a1 - eq.a2 * eq.a0 * LaurentPoly(4);
    if (y.P.is_zero()) throw std::domain_error("resolve: degenerate (parabolic) equation");

    // Keep P at valuation 0 or 1 by moving even q-powers into R and S.
    const std::int64_t shift = y.P.min_deg() >= 0 ? y.P.min_deg() / 2
                                                  : (y.P.min_deg() - 1) / 2;
    if (shift != 0) {
        y.P = y.P.shifted(-2 * shift);
        y.R = y.R.shifted(-shift);
        y.S = y.S.shifted(-shift);
    }
    // Square-free integer content for P, the cofactor divided out of R and S.
    const Int cont_p = poly_content(y.P);
    const Int g = gcd_int(square_part(cont_p), gcd_int(poly_content(y.R), poly_content(y.S)));
    Int t = g;
    while (t > 1 && (g % t != 0 || cont_p % (t * t) != 0)) --t;
    if (t > 1) {
        y.P = *exact_divide(y.P, LaurentPoly(t * t));
        y.R = *exact_divide(y.R, LaurentPoly(t));
        y.S = *exact_divide(y.S, LaurentPoly(t));
    }

    // Branch: match the q = 1 specialization against the exact value.
    const Int r1 = y.R.eval_one(), s1 = y.S.eval_one(), p1 = y.P.eval_one();
    if (p1 <= 0) throw std::domain_error("resolve: non-hyperbolic at q = 1");
    const Int m = square_part(p1);
    const Int d = p1 / (m * m);
    if (d != value.d())
        throw std::logic_error("resolve: radicand does not generate the right field");
    // (r1 ± m sqrt(d))/s1 == (a + b sqrt(d))/c  componentwise.
    if (r1 * value.c() == value.a() * s1 && m * value.c() == value.b() * s1)
        y.branch = 1;
    else if (r1 * value.c() == value.a() * s1 && -m * value.c() == value.b() * s1)
        y.branch = -1;
    else
        throw std::logic_error("resolve: neither root matches the classical value");
    return y;
}

}  // namespace

QuadCoeffs abc(std::span<const std::int64_t> word) {
    if (word.empty()) throw std::invalid_argument("abc: empty word");
    const std::size_t k = word.size();
    const std::int64_t ck = word[k - 1];
    QuadCoeffs out;
    out.A = continuant(slice(word, 1, k));
    out.B = continuant(word) + continuant_inner(word).shifted(ck - 1);
    out.C = continuant(slice(word, 0, k - 1)).shifted(ck - 1);
    return out;
}

Int classical_trace(std::span<const std::int64_t> word) {
    return m_neg_word(word).trace().eval_one();
}

QSurd prs(std::span<const std::int64_t> word) {
    if (word.empty()) throw std::invalid_argument("prs: empty word");
    if (classical_trace(word) <= 2)
        throw std::domain_error("prs: word is not hyperbolic (trace at q=1 must exceed 2)");
    const std::size_t k = word.size();
    const std::int64_t ck = word[k - 1];
    std::int64_t degsum = 0;
    for (std::int64_t c : word) degsum += c - 1;

    const LaurentPoly tr = m_neg_word(word).trace();
    QSurd y;
    y.P = tr * tr - LaurentPoly::monomial(4, degsum);
    y.R = continuant(word) + continuant_inner(word).shifted(ck - 1);
    y.S = continuant(slice(word, 1, k)).scaled(2);
    y.branch = 1;  // purely periodic values exceed their conjugates
    return y;
}

Surd QSurd::classical() const {
    const Int r1 = R.eval_one(), s1 = S.eval_one(), p1 = P.eval_one();
    if (p1 <= 0 || is_square(p1) || s1 == 0)
        throw std::domain_error("QSurd::classical: degenerate specialization");
    const Int m = square_part(p1);
    return Surd::make(r1, branch * m, p1 / (m * m), s1);
}

std::string QSurd::str() const {
    std::ostringstream os;
    os << "(" << R.str_compact() << " " << (branch > 0 ? "+" : "-") << " sqrt("
       << P.str_compact() << ")) / (" << S.str_compact() << ")";
    return os.str();
}

QSurd mobius_apply_qsurd(const QMat2& m, const QSurd& y) {
    // Transport the quadratic equation and track the classical value exactly.
    const auto m1 = m.eval_one();
    const Surd value = y.classical().mobius(m1[0], m1[1], m1[2], m1[3]);
    Equation eq = transport(equation_of(y), m);
    return resolve(std::move(eq), value);
}

QSurd q_quadratic(const Surd& x) {
    const PeriodicCF cf = periodic_negative_cf(x);
    if (classical_trace(cf.period) <= 2)
        throw std::domain_error("q_quadratic: non-hyperbolic period");
    const QSurd periodic = prs(cf.period);
    if (cf.preperiod.empty()) {
        // prs already carries the canonical data; run it through resolve for
        // uniform normalization and branch checking.
        return resolve(equation_of(periodic), x);
    }
    return mobius_apply_qsurd(m_neg_word(cf.preperiod), periodic);
}

QSeries qsurd_series(const QSurd& y, std::int64_t order) {
    if (y.S.is_zero()) throw std::domain_error("qsurd_series: zero denominator");
    const std::int64_t slack = order + std::max<std::int64_t>(y.S.min_deg(), 0) + 2;
    QSeries root = series_sqrt(y.P, slack);
    QSeries num = QSeries(y.R, slack) + (y.branch > 0 ? root : -root);
    return series_div_exact(num, y.S, order);
}

bool desnanot_jacobi_check(std::span<const std::int64_t> word) {
    if (word.empty()) return true;
    const std::size_t k = word.size();
    const std::int64_t ck = word[k - 1];
    std::int64_t degsum = 0;
    for (std::int64_t c : word) degsum += c - 1;
    const LaurentPoly lhs =
        continuant(slice(word, 1, k)) * continuant(slice(word, 0, k - 1)).shifted(ck - 1) -
        continuant(word) * continuant_inner(word).shifted(ck - 1);
    return lhs == LaurentPoly::monomial(1, degsum);
}

bool qsurd_equal(const QSurd& x, const QSurd& y) {
    if (x.R == y.R && x.P == y.P && x.S == y.S && x.branch == y.branch) return true;
    // Same reduced quadratic equation and same classical root.
    Equation ex = equation_of(x), ey = equation_of(y);
    ex.reduce();
    ey.reduce();
    if (ex.a2 != ey.a2 || ex.a1 != ey.a1 || ex.a0 != ey.a0) return false;
    if (!(x.classical() == y.classical())) return false;
    return agree_through(qsurd_series(x, 20), qsurd_series(y, 20), 20);
}

}  // namespace qdeform
