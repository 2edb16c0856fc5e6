#pragma once

// Exact arithmetic aliases used across the whole library.  Everything is
// arbitrary precision: enumeration counts and congruence filters are
// meaningless under rounding, so no floating point appears anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace swcalc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

class SwError : public std::runtime_error {
public:
    explicit SwError(const std::string& what) : std::runtime_error(what) {}
};

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_integer(const Rat& r) {
    if (!is_integer(r))
        throw SwError("expected an integer, got " + r.str());
    return numerator(r);
}

// floor(sqrt(n)) for n >= 0, exact
inline Int isqrt_floor(const Int& n) {
    if (n < 0)
        throw SwError("isqrt_floor of negative value");
    if (n == 0)
        return 0;
    Int x = n, y = (x + 1) / 2;
    while (y < x) {
        x = y;
        y = (x + n / x) / 2;
    }
    return x;
}

inline int parity(const Int& n) { return static_cast<int>(n % 2 != 0); }

}  // namespace swcalc
