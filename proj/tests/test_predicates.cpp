#include <doctest.h>

#include "boundnet/geometry/predicates.hpp"
#include "boundnet/montecarlo/rng.hpp"
#include "oracles.hpp"

using boundnet::geometry::in_circumcircle;
using boundnet::geometry::orient2d;
using boundnet::geometry::Point2;
using boundnet::montecarlo::SplitMix64;

TEST_CASE("orient2d canonical cases") {
    CHECK(orient2d(Point2(0, 0), Point2(1, 0), Point2(0, 1)) == 1);
    CHECK(orient2d(Point2(0, 0), Point2(1, 1), Point2(2, 2)) == 0);
    CHECK(orient2d(Point2(0, 0), Point2(0, 1), Point2(1, 0)) == -1);
}

TEST_CASE("orient2d near-degenerate sign matches the rational oracle") {
    const Point2 a(0, 0), b(1e-12, 1e-12), c(1e12, 1e12 + 1e-4);
    const int got = orient2d(a, b, c);
    CHECK(got == oracle::orient2d(a, b, c));
    CHECK(got == 1);
}

TEST_CASE("orient2d randomized agreement with the oracle") {
    SplitMix64 g(2024);
    for (int iter = 0; iter < 3000; ++iter) {
        const Point2 a(g.uniform01(), g.uniform01());
        const Point2 b(g.uniform01(), g.uniform01());
        // points near the line through a and b stress the filter
        const double t = 4.0 * g.uniform01() - 2.0;
        const double wobble = (g.uniform01() - 0.5) * 1e-14;
        const Point2 c(a.x + t * (b.x - a.x) + wobble,
                       a.y + t * (b.y - a.y) - wobble);
        CHECK(orient2d(a, b, c) == oracle::orient2d(a, b, c));
    }
}

TEST_CASE("in_circumcircle canonical cases") {
    const Point2 a(0, 0), b(1, 0), c(0, 1);
    CHECK(in_circumcircle(a, b, c, Point2(0.25, 0.25)) == 1);
    CHECK(in_circumcircle(a, b, c, Point2(1, 1)) == 0); // cocircular corners
    CHECK(in_circumcircle(a, b, c, Point2(2, 2)) == -1);
}

TEST_CASE("in_circumcircle near-cocircular agreement with the oracle") {
    SplitMix64 g(77);
    int exact_ties = 0;
    for (int iter = 0; iter < 3000; ++iter) {
        // four points on a common circle, then one nudged by ~1e-15
        const double cx = g.uniform01(), cy = g.uniform01();
        const double r = 0.1 + g.uniform01();
        double ang[4];
        for (double& v : ang) v = g.uniform01() * 6.283185307179586;
        Point2 p[4];
        for (int k = 0; k < 4; ++k) {
            p[k] = Point2(cx + r * std::cos(ang[k]), cy + r * std::sin(ang[k]));
        }
        const double nudge = (g.uniform01() - 0.5) * 1e-15;
        p[3] = Point2(p[3].x + nudge, p[3].y);
        if (oracle::orient2d(p[0], p[1], p[2]) < 0) std::swap(p[1], p[2]);
        if (oracle::orient2d(p[0], p[1], p[2]) == 0) continue;
        const int want = oracle::in_circumcircle(p[0], p[1], p[2], p[3]);
        CHECK(in_circumcircle(p[0], p[1], p[2], p[3]) == want);
        if (want == 0) ++exact_ties;
    }
    (void)exact_ties;
}

TEST_CASE("Point2 rejects non-finite coordinates") {
    CHECK_THROWS_AS(Point2(std::nan(""), 0.0), boundnet::InvalidArgument);
    CHECK_THROWS_AS(Point2(0.0, std::numeric_limits<double>::infinity()),
                    boundnet::InvalidArgument);
}
