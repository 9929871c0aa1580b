#include "boundnet/geometry/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "boundnet/geometry/predicates.hpp"

namespace boundnet::geometry {

namespace {

constexpr double kBorderTol = 1e-12;
constexpr double kMinSegmentLength = 1e-12;

Point2 circumcenter(const Point2& a, const Point2& b, const Point2& c) {
    const double bx = b.x - a.x, by = b.y - a.y;
    const double cx = c.x - a.x, cy = c.y - a.y;
    const double d = 2.0 * (bx * cy - by * cx);
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const double ux = (cy * b2 - by * c2) / d;
    const double uy = (bx * c2 - cx * b2) / d;
    return Point2(a.x + ux, a.y + uy);
}

// Clips p + t*dir, t in [t0, t1], to the box. Returns false when nothing is
// left. t1 may be +inf (hull rays).
bool clip_param(const Point2& p, double dx, double dy, double& t0, double& t1,
                const BoundingBox& box) {
    const double lo[2] = {box.min.x, box.min.y};
    const double hi[2] = {box.max.x, box.max.y};
    const double pv[2] = {p.x, p.y};
    const double dv[2] = {dx, dy};
    for (int axis = 0; axis < 2; ++axis) {
        if (dv[axis] == 0.0) {
            if (pv[axis] < lo[axis] - kBorderTol || pv[axis] > hi[axis] + kBorderTol) {
                return false;
            }
            continue;
        }
        double ta = (lo[axis] - pv[axis]) / dv[axis];
        double tb = (hi[axis] - pv[axis]) / dv[axis];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        if (t0 > t1) return false;
    }
    return true;
}

Point2 clamp_to_box(double x, double y, const BoundingBox& box) {
    return Point2(std::clamp(x, box.min.x, box.max.x),
                  std::clamp(y, box.min.y, box.max.y));
}

// clipped bisector piece, or nothing when it degenerates
std::optional<Segment> clip_to_segment(const Point2& start, double dx, double dy,
                                       double tmax, const BoundingBox& box) {
    double t0 = 0.0;
    double t1 = tmax;
    if (!clip_param(start, dx, dy, t0, t1, box)) return std::nullopt;
    const double len = (t1 - t0) * std::hypot(dx, dy);
    if (!(len >= kMinSegmentLength)) return std::nullopt;
    Point2 a = clamp_to_box(start.x + t0 * dx, start.y + t0 * dy, box);
    Point2 b = clamp_to_box(start.x + t1 * dx, start.y + t1 * dy, box);
    if (b.x < a.x || (b.x == a.x && b.y < a.y)) std::swap(a, b);
    return Segment{a, b};
}

std::vector<Point2> clip_cell(const SensorLayout& layout, NodeId i,
                              const std::vector<NodeId>& neighbors) {
    const BoundingBox& box = layout.bbox();
    std::vector<Point2> poly = {
        Point2(box.min.x, box.min.y), Point2(box.max.x, box.min.y),
        Point2(box.max.x, box.max.y), Point2(box.min.x, box.max.y)};
    const Point2& pi = layout.point(i);
    std::vector<Point2> next;
    for (NodeId j : neighbors) {
        const Point2& pj = layout.point(j);
        const double mx = 0.5 * (pi.x + pj.x);
        const double my = 0.5 * (pi.y + pj.y);
        const double ex = pj.x - pi.x;
        const double ey = pj.y - pi.y;
        // keep f(x) = (x - m) . (pj - pi) <= 0, the half nearer to site i
        auto f = [&](const Point2& p) { return (p.x - mx) * ex + (p.y - my) * ey; };
        next.clear();
        const size_t m = poly.size();
        for (size_t k = 0; k < m; ++k) {
            const Point2& p = poly[k];
            const Point2& q = poly[(k + 1) % m];
            const double fp = f(p);
            const double fq = f(q);
            if (fp <= 0.0) next.push_back(p);
            if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
                const double t = fp / (fp - fq);
                next.emplace_back(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y));
            }
        }
        poly = next;
        if (poly.empty()) break;
    }
    return poly;
}

} // namespace

bool VoronoiDiagram::has_segment(NodeId i, NodeId j) const {
    return segment(i, j) != nullptr;
}

const Segment* VoronoiDiagram::segment(NodeId i, NodeId j) const {
    const auto it = segments_.find({std::min(i, j), std::max(i, j)});
    return it == segments_.end() ? nullptr : &it->second;
}

VoronoiDiagram voronoi(const Triangulation& tri) {
    const SensorLayout& layout = tri.layout();
    const BoundingBox& box = layout.bbox();

    // circumcenters and the edge -> adjacent-triangle map
    const auto& triangles = tri.triangles();
    std::vector<Point2> centers;
    centers.reserve(triangles.size());
    for (const auto& t : triangles) {
        centers.push_back(circumcenter(layout.point(t[0]), layout.point(t[1]),
                                       layout.point(t[2])));
    }
    std::map<VoronoiDiagram::EdgeKey, std::vector<int>> edge_tris;
    for (size_t t = 0; t < triangles.size(); ++t) {
        const auto& v = triangles[t];
        for (int e = 0; e < 3; ++e) {
            const NodeId a = v[static_cast<size_t>(e)];
            const NodeId b = v[static_cast<size_t>((e + 1) % 3)];
            edge_tris[{std::min(a, b), std::max(a, b)}].push_back(static_cast<int>(t));
        }
    }

    VoronoiDiagram diagram;
    diagram.layout_ = &layout;

    std::vector<std::vector<NodeId>> neighbors(static_cast<size_t>(layout.size()));
    for (const auto& [edge, adjacent] : edge_tris) {
        const auto [i, j] = edge;
        neighbors[static_cast<size_t>(i)].push_back(j);
        neighbors[static_cast<size_t>(j)].push_back(i);

        std::optional<Segment> seg;
        if (adjacent.size() == 2) {
            const Point2& c1 = centers[static_cast<size_t>(adjacent[0])];
            const Point2& c2 = centers[static_cast<size_t>(adjacent[1])];
            seg = clip_to_segment(c1, c2.x - c1.x, c2.y - c1.y, 1.0, box);
        } else {
            // hull edge: bisector ray from the lone circumcenter, away from
            // the triangulation
            const auto& t = triangles[static_cast<size_t>(adjacent[0])];
            NodeId k = t[0];
            for (NodeId v : t) {
                if (v != i && v != j) k = v;
            }
            const Point2& pi = layout.point(i);
            const Point2& pj = layout.point(j);
            double nx = pj.y - pi.y;
            double ny = pi.x - pj.x;
            // (nx, ny) is the right-hand normal of i->j; flip it to whichever
            // side k is not on
            if (orient2d(pi, pj, layout.point(k)) < 0) {
                nx = -nx;
                ny = -ny;
            }
            seg = clip_to_segment(centers[static_cast<size_t>(adjacent[0])], nx, ny,
                                  std::numeric_limits<double>::infinity(), box);
        }
        if (seg) diagram.segments_.emplace(edge, *seg);
    }

    diagram.cells_.resize(static_cast<size_t>(layout.size()));
    for (NodeId i = 0; i < layout.size(); ++i) {
        auto& nbr = neighbors[static_cast<size_t>(i)];
        std::sort(nbr.begin(), nbr.end());
        diagram.cells_[static_cast<size_t>(i)] = clip_cell(layout, i, nbr);
    }
    return diagram;
}

} // namespace boundnet::geometry
