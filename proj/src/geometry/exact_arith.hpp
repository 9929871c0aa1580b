#pragma once

// Internal: arbitrary-precision rational fallback for the geometric
// predicates. Doubles convert to cpp_rational exactly, so any polynomial in
// the input coordinates can be signed without error.

#include <boost/multiprecision/cpp_int.hpp>

namespace boundnet::geometry::exact {

using Rat = boost::multiprecision::cpp_rational;

inline int sign_of(const Rat& r) {
    if (r > 0) return 1;
    if (r < 0) return -1;
    return 0;
}

inline Rat rat(double d) { return Rat(d); }

// det of rows (x1 y1 z1 / x2 y2 z2 / x3 y3 z3)
inline Rat det3(const Rat& x1, const Rat& y1, const Rat& z1,
                const Rat& x2, const Rat& y2, const Rat& z2,
                const Rat& x3, const Rat& y3, const Rat& z3) {
    return x1 * (y2 * z3 - z2 * y3) - y1 * (x2 * z3 - z2 * x3) +
           z1 * (x2 * y3 - y2 * x3);
}

} // namespace boundnet::geometry::exact
