#include "oracles.hpp"

#include <algorithm>
#include <cmath>

#include <gmpxx.h>

namespace oracle {

namespace {

// Extremely loose relative filter; anything within a factor of 1e8 of the
// noise floor goes to exact arithmetic.
constexpr double kLooseRel = 1e-8;

int sign_mpq(const mpq_class& v) { return sgn(v); }

int orient2d_exact(const Point2& a, const Point2& b, const Point2& c) {
    const mpq_class acx = mpq_class(a.x) - mpq_class(c.x);
    const mpq_class acy = mpq_class(a.y) - mpq_class(c.y);
    const mpq_class bcx = mpq_class(b.x) - mpq_class(c.x);
    const mpq_class bcy = mpq_class(b.y) - mpq_class(c.y);
    return sign_mpq(acx * bcy - acy * bcx);
}

int in_circumcircle_exact(const Point2& a, const Point2& b, const Point2& c,
                          const Point2& d) {
    const mpq_class adx = mpq_class(a.x) - mpq_class(d.x);
    const mpq_class ady = mpq_class(a.y) - mpq_class(d.y);
    const mpq_class bdx = mpq_class(b.x) - mpq_class(d.x);
    const mpq_class bdy = mpq_class(b.y) - mpq_class(d.y);
    const mpq_class cdx = mpq_class(c.x) - mpq_class(d.x);
    const mpq_class cdy = mpq_class(c.y) - mpq_class(d.y);
    const mpq_class ad2 = adx * adx + ady * ady;
    const mpq_class bd2 = bdx * bdx + bdy * bdy;
    const mpq_class cd2 = cdx * cdx + cdy * cdy;
    const mpq_class det = ad2 * (bdx * cdy - cdx * bdy) -
                          bd2 * (adx * cdy - cdx * ady) +
                          cd2 * (adx * bdy - bdx * ady);
    return sign_mpq(det);
}

} // namespace

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
    const double l = (a.x - c.x) * (b.y - c.y);
    const double r = (a.y - c.y) * (b.x - c.x);
    const double det = l - r;
    const double mag = std::fabs(l) + std::fabs(r);
    if (std::fabs(det) > kLooseRel * mag && mag > 1e-280) {
        return det > 0 ? 1 : -1;
    }
    return orient2d_exact(a, b, c);
}

int in_circumcircle(const Point2& a, const Point2& b, const Point2& c,
                    const Point2& d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double ad2 = adx * adx + ady * ady;
    const double bd2 = bdx * bdx + bdy * bdy;
    const double cd2 = cdx * cdx + cdy * cdy;
    const double t1 = ad2 * (bdx * cdy - cdx * bdy);
    const double t2 = bd2 * (adx * cdy - cdx * ady);
    const double t3 = cd2 * (adx * bdy - bdx * ady);
    const double det = t1 - t2 + t3;
    const double mag = std::fabs(t1) + std::fabs(t2) + std::fabs(t3);
    if (std::fabs(det) > kLooseRel * mag && mag > 1e-280) {
        return det > 0 ? 1 : -1;
    }
    return in_circumcircle_exact(a, b, c, d);
}

BruteForceResult brute_force_delaunay(const std::vector<Point2>& pts) {
    const int n = static_cast<int>(pts.size());
    BruteForceResult out;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = j + 1; k < n; ++k) {
                int a = i, b = j, c = k;
                const int o = orient2d(pts[static_cast<size_t>(a)],
                                       pts[static_cast<size_t>(b)],
                                       pts[static_cast<size_t>(c)]);
                if (o == 0) continue;
                if (o < 0) std::swap(b, c);
                bool empty = true;
                for (int s = 0; s < n && empty; ++s) {
                    if (s == i || s == j || s == k) continue;
                    const int v = in_circumcircle(
                        pts[static_cast<size_t>(a)], pts[static_cast<size_t>(b)],
                        pts[static_cast<size_t>(c)], pts[static_cast<size_t>(s)]);
                    if (v > 0) empty = false;
                    if (v == 0) out.cocircular = true;
                }
                if (empty) {
                    std::array<int, 3> t = {a, b, c};
                    while (!(t[0] < t[1] && t[0] < t[2])) t = {t[2], t[0], t[1]};
                    out.triangles.push_back(t);
                }
            }
        }
    }
    std::sort(out.triangles.begin(), out.triangles.end());
    return out;
}

int hull_size(const std::vector<Point2>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> order(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Point2& pa = pts[static_cast<size_t>(a)];
        const Point2& pb = pts[static_cast<size_t>(b)];
        return pa.x != pb.x ? pa.x < pb.x : pa.y < pb.y;
    });

    auto build = [&](int dir) {
        std::vector<int> chain;
        for (int idx : order) {
            while (chain.size() >= 2) {
                const Point2& p1 = pts[static_cast<size_t>(chain[chain.size() - 2])];
                const Point2& p2 = pts[static_cast<size_t>(chain.back())];
                if (dir * orient2d(p1, p2, pts[static_cast<size_t>(idx)]) <= 0) {
                    chain.pop_back();
                } else {
                    break;
                }
            }
            chain.push_back(idx);
        }
        return chain;
    };
    const auto lower = build(1);
    const auto upper = build(-1);
    // endpoints are shared between the chains
    return static_cast<int>(lower.size() + upper.size()) - 2;
}

} // namespace oracle
