#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace conifold {

/// Exact arbitrary-precision integer. Entries of conjugated matrices grow
/// exponentially in word length, so fixed-width types are not an option.
using Int = boost::multiprecision::cpp_int;

/// Least nonnegative residue of a modulo m (m > 0).
inline Int mod_floor(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Extended gcd: returns g = gcd(a,b) >= 0 and writes x, y with a*x + b*y = g.
Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y);

/// Narrowing conversion with a range check.
inline long long to_ll(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::overflow_error("integer does not fit in 64 bits: " + v.str());
    return static_cast<long long>(v);
}

}  // namespace conifold
