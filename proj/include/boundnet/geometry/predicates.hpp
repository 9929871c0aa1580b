#pragma once

#include "boundnet/geometry/types.hpp"

namespace boundnet::geometry {

/// Sign of the signed area of triangle abc: +1 counter-clockwise, -1
/// clockwise, 0 collinear. The decision is exact: a floating-point filter
/// with a Shewchuk-style error bound answers the easy cases and an
/// arbitrary-precision rational evaluation settles the rest.
int orient2d(const Point2& a, const Point2& b, const Point2& c);

/// Position of d relative to the circumcircle of the counter-clockwise
/// triangle abc: +1 strictly inside, -1 strictly outside, 0 cocircular.
/// Exact for the decision, same filtering scheme as orient2d.
int in_circumcircle(const Point2& a, const Point2& b, const Point2& c,
                    const Point2& d);

} // namespace boundnet::geometry
