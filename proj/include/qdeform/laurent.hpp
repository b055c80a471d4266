#pragma once

#include "qdeform/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qdeform {

// Laurent polynomial in q with integer coefficients, stored sparsely as a
// sorted association exponent -> coefficient. No zero coefficients are kept;
// the empty association is 0.
class LaurentPoly {
public:
    using Term = std::pair<std::int64_t, Int>;

    LaurentPoly() = default;
    LaurentPoly(Int constant);
    LaurentPoly(long long constant) : LaurentPoly(Int(constant)) {}
    LaurentPoly(int constant) : LaurentPoly(Int(constant)) {}

    static LaurentPoly monomial(Int coeff, std::int64_t exp);
    // Merges duplicate exponents and drops zeros.
    static LaurentPoly from_terms(std::vector<Term> terms);
    // Contiguous coefficients c0, c1, ... for q^start, q^{start+1}, ...
    static LaurentPoly from_coeffs(const std::vector<Int>& coeffs,
                                   std::int64_t start = 0);

    bool is_zero() const { return terms_.empty(); }
    std::int64_t min_deg() const;  // requires nonzero
    std::int64_t max_deg() const;  // requires nonzero
    std::size_t term_count() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Int& coeff(std::int64_t exp) const;  // 0 for absent exponents

    bool is_one() const;
    // ±q^k detection; returns (sign, k) when the polynomial is a single term
    // with coefficient ±1.
    std::optional<std::pair<int, std::int64_t>> unit_monomial() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& rhs);
    LaurentPoly& operator-=(const LaurentPoly& rhs);
    LaurentPoly& operator*=(const LaurentPoly& rhs);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    bool operator==(const LaurentPoly& rhs) const { return terms_ == rhs.terms_; }
    bool operator!=(const LaurentPoly& rhs) const { return !(*this == rhs); }

    LaurentPoly scaled(const Int& k) const;
    LaurentPoly shifted(std::int64_t n) const;  // multiply by q^n
    LaurentPoly reversed() const;               // substitute q -> q^{-1}

    Int eval_one() const;  // sum of coefficients

    // Coefficient sequence between min_deg and max_deg, interior zeros
    // included, reads the same in both directions. Zero is a palindrome.
    bool is_palindrome() const;
    // Coefficient sequence (interior zeros included) rises then falls.
    bool is_unimodal() const;
    bool has_nonneg_coeffs() const;
    // True when some coefficient between min_deg and max_deg is zero.
    bool has_interior_zero() const;

    // Canonical text form, e.g. "1 + 2*q + q^2", "-q^-2".
    std::string str() const;
    // Dense form without spaces or stars, e.g. "1+2q+q^2".
    std::string str_compact() const;

private:
    std::vector<Term> terms_;  // ascending exponents, nonzero coefficients
    void normalize();
    std::string render(bool spaced) const;
};

// Quotient of p by d when d divides p exactly over the integers, up to a
// q-power unit (the quotient may be a Laurent polynomial). Empty when the
// division is not exact. Throws on d = 0.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& d);

// Content (gcd of coefficients, nonnegative). content(0) = 0.
Int poly_content(const LaurentPoly& p);

// Gcd in Z[q] up to units: the result is an ordinary polynomial with nonzero
// constant term and positive leading coefficient, and includes the integer
// content gcd. poly_gcd(0, 0) = 0.
LaurentPoly poly_gcd(LaurentPoly a, LaurentPoly b);

LaurentPoly poly_pow(const LaurentPoly& base, unsigned long long e);

// Parses both the spaced and the compact form produced by str()/str_compact().
LaurentPoly parse_poly(std::string_view text);

// q-integer [n]_q: 1 + q + ... + q^{n-1} for n > 0, zero for n = 0, and
// -q^{-1} - ... - q^{-n} for n < 0.
LaurentPoly q_int(std::int64_t n);

}  // namespace qdeform
