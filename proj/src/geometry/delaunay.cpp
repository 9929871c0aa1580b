#include "boundnet/geometry/delaunay.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "boundnet/geometry/predicates.hpp"
#include "geometry/exact_arith.hpp"

namespace boundnet::geometry {

namespace {

using exact::Rat;

// The three super-triangle vertices sit at infinity along these directions
// (pairwise counter-clockwise), so the enclosing triangle covers the whole
// plane and no finite placement can distort circumcircle tests near the
// hull. Predicates involving them evaluate the R -> infinity limit of
// vertices at R*u, lower-order terms breaking the ties exactly.
constexpr std::array<std::array<int, 2>, 3> kSuperDir = {{{1, 0}, {-1, 1}, {-1, -1}}};

constexpr double kSmallExprEps = 16.0 * std::numeric_limits<double>::epsilon();
constexpr double kTinyMagnitude = 1e-290;

// sign of c1*(x1-x2) + c2*(y1-y2) for small integer c1, c2
int sign_lindiff(double c1, double x1, double x2, double c2, double y1, double y2) {
    const double t1 = c1 * (x1 - x2);
    const double t2 = c2 * (y1 - y2);
    const double s = t1 + t2;
    const double mag = std::fabs(t1) + std::fabs(t2);
    if (mag >= kTinyMagnitude) {
        if (s > kSmallExprEps * mag) return 1;
        if (-s > kSmallExprEps * mag) return -1;
    }
    const Rat r = Rat(c1) * (Rat(x1) - Rat(x2)) + Rat(c2) * (Rat(y1) - Rat(y2));
    return exact::sign_of(r);
}

// sign of x1*y2 - y1*x2
int sign_cross_raw(double x1, double y1, double x2, double y2) {
    const double t1 = x1 * y2;
    const double t2 = y1 * x2;
    const double s = t1 - t2;
    const double mag = std::fabs(t1) + std::fabs(t2);
    if (mag >= kTinyMagnitude) {
        if (s > kSmallExprEps * mag) return 1;
        if (-s > kSmallExprEps * mag) return -1;
    }
    return exact::sign_of(Rat(x1) * Rat(y2) - Rat(y1) * Rat(x2));
}

// orient2d(f1, f2, s_u): R*cross(f2-f1, u) + cross(f2-f1, -f1)
int orient_one_super(const Point2& f1, const Point2& f2, const std::array<int, 2>& u) {
    const int primary = sign_lindiff(u[1], f2.x, f1.x, -u[0], f2.y, f1.y);
    if (primary != 0) return primary;
    return sign_cross_raw(f1.x, f1.y, f2.x, f2.y);
}

// in_circumcircle((f1, f2, s_u), d) at the limit. Called with d on the line
// f1-f2 already excluded by the caller's fast path.
int incircle_one_super_tie(const Point2& f1, const Point2& f2,
                           const std::array<int, 2>& u, const Point2& d) {
    const Rat pdx = Rat(f1.x) - Rat(d.x);
    const Rat pdy = Rat(f1.y) - Rat(d.y);
    const Rat qdx = Rat(f2.x) - Rat(d.x);
    const Rat qdy = Rat(f2.y) - Rat(d.y);
    const Rat pd2 = pdx * pdx + pdy * pdy;
    const Rat qd2 = qdx * qdx + qdy * qdy;

    const Rat d1 = Rat(u[0]) * (pdy * qd2 - pd2 * qdy) -
                   Rat(u[1]) * (pdx * qd2 - pd2 * qdx);
    if (int s = exact::sign_of(d1); s != 0) return s;

    const Rat gz = Rat(d.x) * Rat(d.x) + Rat(d.y) * Rat(d.y);
    const Rat d2 = exact::det3(pdx, pdy, pd2, qdx, qdy, qd2,
                               -Rat(d.x), -Rat(d.y), gz);
    if (int s = exact::sign_of(d2); s != 0) return s;

    // u parallel to the edge and d collinear with it: the limit circle is the
    // line itself, whose interior degenerates to the open chord.
    const Rat ex = Rat(f2.x) - Rat(f1.x);
    const Rat ey = Rat(f2.y) - Rat(f1.y);
    const Rat t = (Rat(d.x) - Rat(f1.x)) * ex + (Rat(d.y) - Rat(f1.y)) * ey;
    const Rat len2 = ex * ex + ey * ey;
    return (t > 0 && t < len2) ? 1 : -1;
}

// in_circumcircle((f, s_ui, s_uj), d) at the limit.
int incircle_two_super(const Point2& f, const std::array<int, 2>& ui,
                       const std::array<int, 2>& uj, const Point2& d) {
    const int wi = ui[0] * ui[0] + ui[1] * ui[1];
    const int wj = uj[0] * uj[0] + uj[1] * uj[1];
    const int ca = wj * ui[1] - wi * uj[1];
    const int cb = wj * ui[0] - wi * uj[0];
    const int primary = sign_lindiff(ca, f.x, d.x, -cb, f.y, d.y);
    if (primary != 0) return primary;

    const Rat pdx = Rat(f.x) - Rat(d.x);
    const Rat pdy = Rat(f.y) - Rat(d.y);
    const Rat pd2 = pdx * pdx + pdy * pdy;
    const Rat dx = Rat(d.x), dy = Rat(d.y);
    const Rat dd2 = dx * dx + dy * dy;
    const Rat uid = Rat(ui[0]) * dx + Rat(ui[1]) * dy;
    const Rat ujd = Rat(uj[0]) * dx + Rat(uj[1]) * dy;

    const Rat e2 = exact::det3(pdx, pdy, pd2, Rat(0), Rat(0), Rat(wi), -dx, -dy, dd2) +
                   exact::det3(pdx, pdy, pd2, -dx, -dy, dd2, Rat(0), Rat(0), Rat(wj)) +
                   exact::det3(pdx, pdy, pd2, Rat(ui[0]), Rat(ui[1]), -2 * uid,
                               Rat(uj[0]), Rat(uj[1]), -2 * ujd);
    if (int s = exact::sign_of(e2); s != 0) return s;

    const Rat e1 = exact::det3(pdx, pdy, pd2, Rat(ui[0]), Rat(ui[1]), -2 * uid,
                               -dx, -dy, dd2) +
                   exact::det3(pdx, pdy, pd2, -dx, -dy, dd2,
                               Rat(uj[0]), Rat(uj[1]), -2 * ujd);
    return exact::sign_of(e1);
}

struct Tri {
    std::array<int, 3> v;
    std::array<int, 3> adj; // adj[e] faces edge (v[e], v[(e+1)%3]); -1 = none
};

class Builder {
public:
    explicit Builder(const SensorLayout& layout)
        : layout_(layout), n_(layout.size()) {
        tris_.push_back(Tri{{n_, n_ + 1, n_ + 2}, {-1, -1, -1}});
        alive_.push_back(1);
        tested_.push_back(0);
        hint_ = 0;
    }

    void insert_all() {
        for (int id = 0; id < n_; ++id) insert(id);
    }

    std::vector<std::array<NodeId, 3>> real_triangles() const {
        std::vector<std::array<NodeId, 3>> out;
        for (size_t t = 0; t < tris_.size(); ++t) {
            if (!alive_[t]) continue;
            const auto& v = tris_[t].v;
            if (v[0] < n_ && v[1] < n_ && v[2] < n_) {
                out.push_back({v[0], v[1], v[2]});
            }
        }
        return out;
    }

private:
    bool is_super(int id) const { return id >= n_; }
    const Point2& pt(int id) const { return layout_.point(id); }
    const std::array<int, 2>& dir(int id) const {
        return kSuperDir[static_cast<size_t>(id - n_)];
    }

    // orientation of the directed edge (a, b) against a finite query point
    int orient_vp(int a, int b, const Point2& p) const {
        const bool sa = is_super(a), sb = is_super(b);
        if (!sa && !sb) return orient2d(pt(a), pt(b), p);
        if (sa && sb) {
            const auto& ua = dir(a);
            const auto& ub = dir(b);
            const int c = ua[0] * ub[1] - ua[1] * ub[0];
            return (c > 0) - (c < 0);
        }
        if (sb) return orient_one_super(p, pt(a), dir(b));   // (a, s, p) ~ (p, a, s)
        return orient_one_super(pt(b), p, dir(a));           // (s, b, p) ~ (b, p, s)
    }

    int incircle_vp(const Tri& t, const Point2& p) const {
        std::array<int, 3> v = t.v;
        int nsuper = 0;
        for (int id : v) nsuper += is_super(id) ? 1 : 0;
        if (nsuper == 0) return in_circumcircle(pt(v[0]), pt(v[1]), pt(v[2]), p);
        if (nsuper == 3) return 1;
        if (nsuper == 1) {
            while (!is_super(v[2])) { // cyclic rotate so the super sits last
                v = {v[2], v[0], v[1]};
            }
            const int fast = orient2d(pt(v[0]), pt(v[1]), p);
            if (fast != 0) return fast;
            return incircle_one_super_tie(pt(v[0]), pt(v[1]), dir(v[2]), p);
        }
        while (is_super(v[0])) { // cyclic rotate so the finite vertex leads
            v = {v[2], v[0], v[1]};
        }
        return incircle_two_super(pt(v[0]), dir(v[1]), dir(v[2]), p);
    }

    int locate(const Point2& p) const {
        int t = hint_;
        if (t < 0 || t >= static_cast<int>(tris_.size()) || !alive_[static_cast<size_t>(t)]) {
            t = first_alive();
        }
        long steps = 0;
        const long cap = 4 * static_cast<long>(tris_.size()) + 16;
        while (steps++ < cap) {
            const Tri& tri = tris_[static_cast<size_t>(t)];
            int next = -1;
            bool inside = true;
            for (int e = 0; e < 3; ++e) {
                if (orient_vp(tri.v[e], tri.v[(e + 1) % 3], p) < 0) {
                    inside = false;
                    if (tri.adj[e] >= 0) {
                        next = tri.adj[e];
                        break;
                    }
                }
            }
            if (inside) return t;
            if (next < 0) break;
            t = next;
        }
        // walk failed to settle (should not happen); deterministic scan
        for (size_t i = 0; i < tris_.size(); ++i) {
            if (!alive_[i]) continue;
            const Tri& tri = tris_[i];
            bool inside = true;
            for (int e = 0; e < 3 && inside; ++e) {
                inside = orient_vp(tri.v[e], tri.v[(e + 1) % 3], p) >= 0;
            }
            if (inside) return static_cast<int>(i);
        }
        throw Error("delaunay: point location failed");
    }

    int first_alive() const {
        for (size_t i = 0; i < tris_.size(); ++i) {
            if (alive_[i]) return static_cast<int>(i);
        }
        throw Error("delaunay: no alive triangle");
    }

    void insert(int id) {
        const Point2& p = pt(id);
        const int t0 = locate(p);

        // grow the cavity of triangles whose circumcircle strictly contains p
        ++epoch_;
        std::vector<int> cavity;
        std::vector<int> stack{t0};
        state_of(t0) = epoch_; // in cavity
        if (incircle_vp(tris_[static_cast<size_t>(t0)], p) <= 0) {
            // p coincides with an existing vertex (on-edge/in-triangle points
            // are always strictly inside the circumcircle)
            throw DuplicateSite("delaunay: site " + std::to_string(id) +
                                " coincides with an existing site");
        }
        struct BEdge { int a, b, out; };
        std::vector<BEdge> boundary;
        while (!stack.empty()) {
            const int t = stack.back();
            stack.pop_back();
            cavity.push_back(t);
            const Tri tri = tris_[static_cast<size_t>(t)];
            for (int e = 0; e < 3; ++e) {
                const int nb = tri.adj[e];
                if (nb < 0) {
                    boundary.push_back({tri.v[e], tri.v[(e + 1) % 3], -1});
                    continue;
                }
                const int st = state_of(nb);
                if (st == epoch_) continue; // already in cavity
                if (st == -epoch_) {        // already tested, outside
                    boundary.push_back({tri.v[e], tri.v[(e + 1) % 3], nb});
                    continue;
                }
                if (incircle_vp(tris_[static_cast<size_t>(nb)], p) > 0) {
                    state_of(nb) = epoch_;
                    stack.push_back(nb);
                } else {
                    state_of(nb) = -epoch_;
                    boundary.push_back({tri.v[e], tri.v[(e + 1) % 3], nb});
                }
            }
        }

        for (int t : cavity) alive_[static_cast<size_t>(t)] = 0;

        // fan p to the cavity boundary; link the fan ring via shared vertices
        auto& start_of = scratch_a_;
        auto& end_of = scratch_b_;
        start_of.assign(static_cast<size_t>(n_) + 3, -1);
        end_of.assign(static_cast<size_t>(n_) + 3, -1);
        std::vector<int> created;
        created.reserve(boundary.size());
        for (const BEdge& be : boundary) {
            const int t = new_tri(Tri{{be.a, be.b, id}, {be.out, -1, -1}});
            if (be.out >= 0) set_adj(be.out, be.b, be.a, t);
            start_of[static_cast<size_t>(be.a)] = t;
            end_of[static_cast<size_t>(be.b)] = t;
            created.push_back(t);
        }
        for (int t : created) {
            Tri& tri = tris_[static_cast<size_t>(t)];
            tri.adj[1] = start_of[static_cast<size_t>(tri.v[1])];
            tri.adj[2] = end_of[static_cast<size_t>(tri.v[0])];
        }
        hint_ = created.empty() ? first_alive() : created.back();
    }

    int new_tri(const Tri& t) {
        tris_.push_back(t);
        alive_.push_back(1);
        tested_.push_back(0);
        return static_cast<int>(tris_.size()) - 1;
    }

    // neighbor across directed edge (a, b) of triangle t becomes `to`
    void set_adj(int t, int a, int b, int to) {
        Tri& tri = tris_[static_cast<size_t>(t)];
        for (int e = 0; e < 3; ++e) {
            if (tri.v[e] == a && tri.v[(e + 1) % 3] == b) {
                tri.adj[e] = to;
                return;
            }
        }
        throw Error("delaunay: adjacency wiring failed");
    }

    int& state_of(int t) { return tested_[static_cast<size_t>(t)]; }
    int state_of(int t) const { return tested_[static_cast<size_t>(t)]; }

    const SensorLayout& layout_;
    int n_;
    std::vector<Tri> tris_;
    std::vector<uint8_t> alive_;
    std::vector<int> tested_; // +epoch = in cavity, -epoch = tested outside
    std::vector<int> scratch_a_;
    std::vector<int> scratch_b_;
    int epoch_ = 0;
    int hint_ = 0;
};

std::array<NodeId, 3> canonical(std::array<NodeId, 3> t) {
    while (!(t[0] < t[1] && t[0] < t[2])) t = {t[2], t[0], t[1]};
    return t;
}

// Cocircular quads admit both diagonals; normalize to the one whose smaller
// endpoint id is smallest so seeded runs are reproducible bit for bit.
void normalize_cocircular(const SensorLayout& layout,
                          std::vector<std::array<NodeId, 3>>& tris) {
    const long cap = 3 * static_cast<long>(tris.size()) + 8;
    for (long pass = 0; pass < cap; ++pass) {
        std::map<std::pair<NodeId, NodeId>, std::vector<std::pair<int, NodeId>>> sides;
        for (size_t t = 0; t < tris.size(); ++t) {
            const auto& v = tris[t];
            for (int e = 0; e < 3; ++e) {
                const NodeId a = v[static_cast<size_t>(e)];
                const NodeId b = v[static_cast<size_t>((e + 1) % 3)];
                const NodeId opp = v[static_cast<size_t>((e + 2) % 3)];
                sides[{std::min(a, b), std::max(a, b)}].push_back(
                    {static_cast<int>(t), opp});
            }
        }
        bool flipped = false;
        for (const auto& [edge, adj] : sides) {
            if (adj.size() != 2) continue;
            const NodeId i = edge.first, j = edge.second;
            const NodeId k = adj[0].second, l = adj[1].second;
            if (std::min(k, l) >= std::min(i, j)) continue;
            const auto& t1 = tris[static_cast<size_t>(adj[0].first)];
            if (in_circumcircle(layout.point(t1[0]), layout.point(t1[1]),
                                layout.point(t1[2]), layout.point(l)) != 0) {
                continue;
            }
            // orient the quad as t1 = (i', j', k) with the shared edge first
            NodeId a = i, b = j;
            bool ok = false;
            for (int e = 0; e < 3; ++e) {
                if (t1[static_cast<size_t>(e)] == k) {
                    a = t1[static_cast<size_t>((e + 1) % 3)];
                    b = t1[static_cast<size_t>((e + 2) % 3)];
                    ok = true;
                }
            }
            if (!ok) continue;
            tris[static_cast<size_t>(adj[0].first)] = canonical({a, l, k});
            tris[static_cast<size_t>(adj[1].first)] = canonical({l, b, k});
            flipped = true;
            break;
        }
        if (!flipped) return;
    }
}

} // namespace

Triangulation delaunay(const SensorLayout& layout) {
    const int n = layout.size();
    if (n < 3) {
        throw DegenerateInput("delaunay: need at least 3 sites, got " +
                              std::to_string(n));
    }
    bool has_noncollinear = false;
    for (int k = 2; k < n && !has_noncollinear; ++k) {
        has_noncollinear =
            orient2d(layout.point(0), layout.point(1), layout.point(k)) != 0;
    }
    if (!has_noncollinear) {
        // points 2..n-1 all on line(0,1); any triple is then collinear
        throw DegenerateInput("delaunay: all sites are collinear");
    }

    Builder builder(layout);
    builder.insert_all();
    auto tris = builder.real_triangles();

    for (auto& t : tris) t = canonical(t);
    normalize_cocircular(layout, tris);
    std::sort(tris.begin(), tris.end());

    Triangulation result;
    result.layout_ = &layout;
    result.triangles_ = std::move(tris);

    std::vector<std::pair<NodeId, NodeId>> edges;
    for (const auto& t : result.triangles_) {
        for (int e = 0; e < 3; ++e) {
            const NodeId a = t[static_cast<size_t>(e)];
            const NodeId b = t[static_cast<size_t>((e + 1) % 3)];
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    result.edges_ = std::move(edges);
    result.edge_i_.reserve(result.edges_.size());
    result.edge_j_.reserve(result.edges_.size());
    for (const auto& [i, j] : result.edges_) {
        result.edge_i_.push_back(i);
        result.edge_j_.push_back(j);
    }
    return result;
}

} // namespace boundnet::geometry
