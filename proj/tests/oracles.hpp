#pragma once

// Test-only oracles, deliberately independent of the library's predicate
// path: decisions come from GMP rationals behind a very conservative double
// filter, and the brute-force triangulation enumerates all triples.

#include <array>
#include <vector>

#include "boundnet/geometry/types.hpp"

namespace oracle {

using boundnet::geometry::Point2;

int orient2d(const Point2& a, const Point2& b, const Point2& c);
int in_circumcircle(const Point2& a, const Point2& b, const Point2& c,
                    const Point2& d);

struct BruteForceResult {
    std::vector<std::array<int, 3>> triangles; // canonical CCW, sorted
    bool cocircular = false; // a cocircular quadruple was seen; set equality
                             // with an incremental triangulation is then
                             // ambiguous
};

/// All triangles with an empty open circumdisk, by exhaustive enumeration.
BruteForceResult brute_force_delaunay(const std::vector<Point2>& pts);

/// Number of convex hull vertices (exact orientation tests).
int hull_size(const std::vector<Point2>& pts);

} // namespace oracle
