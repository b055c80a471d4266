#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qdeform {

// Exact integer coefficient type. All arithmetic in the library is exact;
// there are no floating-point code paths.
using Int = boost::multiprecision::cpp_int;

inline int sign_of(const Int& v) { return v.sign(); }

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

inline Int gcd_int(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

// Floor of sqrt for nonnegative n.
inline Int isqrt(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    return boost::multiprecision::sqrt(n);
}

inline bool is_square(const Int& n) {
    if (n < 0) return false;
    Int r = isqrt(n);
    return r * r == n;
}

// Largest t with t^2 dividing n (n > 0), by trial division.
Int square_part(Int n);

// Floor division with sign convention of mathematics (round toward -inf).
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

}  // namespace qdeform
