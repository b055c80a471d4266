#pragma once

#include "qdeform/core.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace qdeform {

enum class CFFlavor { Regular, Negative };

// Exact rational r/s, den > 0, lowest terms.
struct Rational {
    Int num;
    Int den;

    Rational() : num(0), den(1) {}
    Rational(Int n, Int d);
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    std::string str() const;
};

// A continued-fraction word in either flavor. Canonical regular words have
// even length with a_i >= 1 for i >= 2; canonical negative words have
// c_i >= 2 for i >= 2. Arbitrary integer words are representable; evaluation
// may fail on them.
struct CFWord {
    CFFlavor flavor = CFFlavor::Regular;
    std::vector<std::int64_t> coeffs;

    bool is_canonical() const;
    std::string str() const;  // "[a1,a2,...]" or "[[c1,c2,...]]"
};

// Canonical even-length regular expansion of r/s (s > 0).
CFWord regular_cf(const Int& r, const Int& s);
// Canonical Hirzebruch-Jung expansion of r/s (s > 0).
CFWord negative_cf(const Int& r, const Int& s);

// Exact nested evaluation. Throws std::domain_error("ill-defined word") when
// a division by zero occurs at any level.
Rational eval_cf_classical(const CFWord& w);

Rational parse_fraction(std::string_view text);
// Accepts "[a1,a2,...]" and "[[c1,c2,...]]".
CFWord parse_cf_word(std::string_view text);

}  // namespace qdeform
