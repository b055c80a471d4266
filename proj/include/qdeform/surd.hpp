#pragma once

#include "qdeform/cf.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qdeform {

// Real quadratic irrational (a + b*sqrt(d))/c in canonical form: d > 1
// squarefree, b != 0, c > 0, gcd(a, b, c) = 1. Canonical form makes value
// equality structural.
class Surd {
public:
    // (r + sgn*sqrt(p))/s with p > 0 not a perfect square, s > 0.
    Surd(Int r, int sgn, Int p, Int s);
    // General constructor (a + b*sqrt(d))/c, b != 0.
    static Surd make(Int a, Int b, Int d, Int c);

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& d() const { return d_; }
    const Int& c() const { return c_; }

    bool operator==(const Surd& o) const {
        return a_ == o.a_ && b_ == o.b_ && d_ == o.d_ && c_ == o.c_;
    }
    bool operator<(const Surd& o) const;  // ordering for use as map key

    // Exact sign of (*this) - num/den.
    int compare_rational(const Int& num, const Int& den) const;
    Int floor() const;
    Int ceil() const;  // = floor + 1, the value being irrational

    Surd negated() const;
    Surd shifted(const Int& n) const;      // x + n
    Surd reciprocal() const;               // 1/x
    Surd conjugate() const;                // flip the radical sign
    // (p x + r)/(t x + u); throws when the denominator vanishes.
    Surd mobius(const Int& p, const Int& r, const Int& t, const Int& u) const;

    std::string str() const;

private:
    Surd() = default;
    Int a_, b_, d_, c_;
    void normalize();
};

// Eventually periodic Hirzebruch-Jung expansion
// x = [[b_1, ..., b_l, period repeated]].
struct PeriodicCF {
    std::vector<std::int64_t> preperiod;
    std::vector<std::int64_t> period;  // minimal cycle, nonempty

    std::string str() const;
    // Stream of coefficients cycling through the period forever.
    CFWord prefix_word(std::size_t total_len) const;
};

// Expansion by the ceiling map c = ceil(x), x' = 1/(c - x) on exact surd
// states; the cycle is found by state recurrence, so the reported period is
// minimal. Termination is Lagrange's theorem; a defensive iteration cap
// throws std::runtime_error if exceeded.
PeriodicCF periodic_negative_cf(const Surd& x);

// Accepts "sqrt(p)", "a+sqrt(p)", "(r+sqrt(p))/s", "(r-sqrt(p))/s" and the
// general "(a+b*sqrt(d))/c".
Surd parse_surd(std::string_view text);

}  // namespace qdeform
