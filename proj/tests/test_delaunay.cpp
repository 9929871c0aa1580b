#include <algorithm>
#include <doctest.h>
#include <map>
#include <set>

#include "boundnet/geometry/delaunay.hpp"
#include "boundnet/geometry/predicates.hpp"
#include "boundnet/montecarlo/montecarlo.hpp"
#include "oracles.hpp"

using namespace boundnet::geometry;
using boundnet::montecarlo::random_layout;

namespace {

SensorLayout unit_square_corners() {
    return SensorLayout({Point2(0, 0), Point2(1, 0), Point2(1, 1), Point2(0, 1)},
                        BoundingBox(Point2(0, 0), Point2(1, 1)));
}

} // namespace

TEST_CASE("three sites give one triangle and three edges") {
    SensorLayout layout({Point2(0, 0), Point2(2, 0), Point2(1, 2)},
                        BoundingBox(Point2(0, 0), Point2(2, 2)));
    const Triangulation tri = delaunay(layout);
    REQUIRE(tri.triangles().size() == 1);
    CHECK(tri.triangles()[0] == std::array<NodeId, 3>{0, 1, 2});
    CHECK(tri.edges().size() == 3);
}

TEST_CASE("unit square: cocircular tie resolves to the diagonal through node 0") {
    const SensorLayout layout = unit_square_corners();
    const Triangulation tri = delaunay(layout);
    REQUIRE(tri.triangles().size() == 2);
    CHECK(tri.triangles()[0] == std::array<NodeId, 3>{0, 1, 2});
    CHECK(tri.triangles()[1] == std::array<NodeId, 3>{0, 2, 3});
    // the other diagonal is not an edge
    const auto& edges = tri.edges();
    CHECK(std::find(edges.begin(), edges.end(), std::make_pair(1, 3)) == edges.end());
    CHECK(std::find(edges.begin(), edges.end(), std::make_pair(0, 2)) != edges.end());
}

TEST_CASE("tie-break holds regardless of which diagonal insertion favors") {
    // same square, labels rotated so naive insertion would keep diagonal (1,3)
    SensorLayout layout({Point2(0, 0), Point2(1, 0), Point2(0, 1), Point2(1, 1)},
                        BoundingBox(Point2(0, 0), Point2(1, 1)));
    const Triangulation tri = delaunay(layout);
    REQUIRE(tri.triangles().size() == 2);
    std::set<std::pair<NodeId, NodeId>> edges(tri.edges().begin(), tri.edges().end());
    CHECK(edges.count({0, 3}) == 1); // diagonal containing node 0
    CHECK(edges.count({1, 2}) == 0);
}

TEST_CASE("errors: too few sites, collinear sites, duplicate sites") {
    const BoundingBox box(Point2(0, 0), Point2(4, 4));
    CHECK_THROWS_AS(delaunay(SensorLayout({Point2(0, 0), Point2(1, 1)}, box)),
                    boundnet::DegenerateInput);
    CHECK_THROWS_AS(
        delaunay(SensorLayout({Point2(0, 0), Point2(1, 1), Point2(2, 2), Point2(3, 3)}, box)),
        boundnet::DegenerateInput);
    CHECK_THROWS_AS(SensorLayout({Point2(1, 1), Point2(2, 2), Point2(1, 1)}, box),
                    boundnet::DuplicateSite);
}

TEST_CASE("100 random sites: Euler count and empty circumcircles") {
    const BoundingBox box(Point2(0, 0), Point2(1, 1));
    const SensorLayout layout = random_layout(100, box, 4242, 0);
    const Triangulation tri = delaunay(layout);

    const int h = oracle::hull_size(layout.points());
    CHECK(static_cast<int>(tri.triangles().size()) == 2 * 100 - 2 - h);

    for (const auto& t : tri.triangles()) {
        CHECK(orient2d(layout.point(t[0]), layout.point(t[1]), layout.point(t[2])) == 1);
        for (NodeId s = 0; s < layout.size(); ++s) {
            if (s == t[0] || s == t[1] || s == t[2]) continue;
            CHECK(oracle::in_circumcircle(layout.point(t[0]), layout.point(t[1]),
                                          layout.point(t[2]), layout.point(s)) <= 0);
        }
    }
}

TEST_CASE("triangle set equals the brute-force oracle on random layouts") {
    const BoundingBox box(Point2(0, 0), Point2(1, 1));
    for (int trial = 0; trial < 12; ++trial) {
        const int n = 4 + trial * 3;
        const SensorLayout layout = random_layout(n, box, 99, trial);
        const Triangulation tri = delaunay(layout);
        const auto oracle_result = oracle::brute_force_delaunay(layout.points());
        REQUIRE(!oracle_result.cocircular);
        CHECK(tri.triangles() == oracle_result.triangles);
    }
}

TEST_CASE("interior/hull edge incidence counts") {
    const BoundingBox box(Point2(0, 0), Point2(1, 1));
    const SensorLayout layout = random_layout(60, box, 7, 3);
    const Triangulation tri = delaunay(layout);
    std::map<std::pair<NodeId, NodeId>, int> uses;
    for (const auto& t : tri.triangles()) {
        for (int e = 0; e < 3; ++e) {
            const NodeId a = t[static_cast<size_t>(e)];
            const NodeId b = t[static_cast<size_t>((e + 1) % 3)];
            ++uses[{std::min(a, b), std::max(a, b)}];
        }
    }
    CHECK(uses.size() == tri.edges().size());
    int hull_edges = 0;
    for (const auto& [edge, c] : uses) {
        CHECK(c >= 1);
        CHECK(c <= 2);
        if (c == 1) ++hull_edges;
    }
    CHECK(hull_edges == oracle::hull_size(layout.points()));
}

TEST_CASE("determinism: identical layouts produce identical structures") {
    const BoundingBox box(Point2(0, 0), Point2(1, 1));
    const SensorLayout a = random_layout(80, box, 321, 0);
    const SensorLayout b = random_layout(80, box, 321, 0);
    const Triangulation ta = delaunay(a);
    const Triangulation tb = delaunay(b);
    CHECK(ta.triangles() == tb.triangles());
    CHECK(ta.edges() == tb.edges());
}

TEST_CASE("grid with many cocircular quads still triangulates consistently") {
    // 4x4 integer grid: every unit square is a cocircular quad
    std::vector<Point2> pts;
    for (int y = 0; y < 4; ++y) {
        for (int x = 0; x < 4; ++x) pts.emplace_back(x, y);
    }
    SensorLayout layout(std::move(pts), BoundingBox(Point2(0, 0), Point2(3, 3)));
    const Triangulation tri = delaunay(layout);
    // Euler: n=16, h=12 boundary vertices -> 2*16-2-12 = 18 triangles
    CHECK(tri.triangles().size() == 18);
    for (const auto& t : tri.triangles()) {
        CHECK(orient2d(layout.point(t[0]), layout.point(t[1]), layout.point(t[2])) == 1);
        for (NodeId s = 0; s < layout.size(); ++s) {
            if (s == t[0] || s == t[1] || s == t[2]) continue;
            CHECK(oracle::in_circumcircle(layout.point(t[0]), layout.point(t[1]),
                                          layout.point(t[2]), layout.point(s)) <= 0);
        }
        // normalized ties: no alternative diagonal with a smaller endpoint
    }
    const Triangulation again = delaunay(layout);
    CHECK(tri.triangles() == again.triangles());
}

TEST_CASE("partially collinear input (points on a line plus one apex)") {
    std::vector<Point2> pts;
    for (int x = 0; x <= 6; ++x) pts.emplace_back(x, 0.0);
    pts.emplace_back(3.0, 2.0);
    SensorLayout layout(std::move(pts), BoundingBox(Point2(-1, -1), Point2(7, 3)));
    const Triangulation tri = delaunay(layout);
    CHECK(tri.triangles().size() == 6); // a fan from the apex
    for (const auto& t : tri.triangles()) {
        for (NodeId s = 0; s < layout.size(); ++s) {
            if (s == t[0] || s == t[1] || s == t[2]) continue;
            CHECK(oracle::in_circumcircle(layout.point(t[0]), layout.point(t[1]),
                                          layout.point(t[2]), layout.point(s)) <= 0);
        }
    }
}
