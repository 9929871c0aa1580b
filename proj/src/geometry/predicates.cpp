#include "boundnet/geometry/predicates.hpp"

#include <cmath>
#include <limits>

#include "geometry/exact_arith.hpp"

namespace boundnet::geometry {

namespace {

// Shewchuk's stage-A error bounds. kEps is the rounding unit 2^-53.
constexpr double kEps = std::numeric_limits<double>::epsilon() * 0.5;
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBound = (10.0 + 96.0 * kEps) * kEps;
// Below this magnitude the products may have underflowed and the relative
// bounds no longer hold; go straight to the exact path.
constexpr double kTinyMagnitude = 1e-290;

int orient2d_rational(const Point2& a, const Point2& b, const Point2& c) {
    using exact::Rat;
    const Rat acx = Rat(a.x) - Rat(c.x);
    const Rat acy = Rat(a.y) - Rat(c.y);
    const Rat bcx = Rat(b.x) - Rat(c.x);
    const Rat bcy = Rat(b.y) - Rat(c.y);
    return exact::sign_of(acx * bcy - acy * bcx);
}

int in_circumcircle_rational(const Point2& a, const Point2& b, const Point2& c,
                             const Point2& d) {
    using exact::Rat;
    const Rat adx = Rat(a.x) - Rat(d.x);
    const Rat ady = Rat(a.y) - Rat(d.y);
    const Rat bdx = Rat(b.x) - Rat(d.x);
    const Rat bdy = Rat(b.y) - Rat(d.y);
    const Rat cdx = Rat(c.x) - Rat(d.x);
    const Rat cdy = Rat(c.y) - Rat(d.y);
    const Rat ad2 = adx * adx + ady * ady;
    const Rat bd2 = bdx * bdx + bdy * bdy;
    const Rat cd2 = cdx * cdx + cdy * cdy;
    return exact::sign_of(exact::det3(adx, ady, ad2, bdx, bdy, bd2, cdx, cdy, cd2));
}

} // namespace

int orient2d(const Point2& a, const Point2& b, const Point2& c) {
    const double detleft = (a.x - c.x) * (b.y - c.y);
    const double detright = (a.y - c.y) * (b.x - c.x);
    const double det = detleft - detright;
    const double detsum = std::fabs(detleft) + std::fabs(detright);

    if (detsum >= kTinyMagnitude) {
        const double errbound = kCcwErrBound * detsum;
        if (det > errbound) return 1;
        if (-det > errbound) return -1;
    }
    return orient2d_rational(a, b, c);
}

int in_circumcircle(const Point2& a, const Point2& b, const Point2& c,
                    const Point2& d) {
    const double adx = a.x - d.x;
    const double ady = a.y - d.y;
    const double bdx = b.x - d.x;
    const double bdy = b.y - d.y;
    const double cdx = c.x - d.x;
    const double cdy = c.y - d.y;

    const double bdxcdy = bdx * cdy;
    const double cdxbdy = cdx * bdy;
    const double alift = adx * adx + ady * ady;

    const double cdxady = cdx * ady;
    const double adxcdy = adx * cdy;
    const double blift = bdx * bdx + bdy * bdy;

    const double adxbdy = adx * bdy;
    const double bdxady = bdx * ady;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                       clift * (adxbdy - bdxady);
    const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                             (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                             (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;

    if (permanent >= kTinyMagnitude) {
        const double errbound = kIccErrBound * permanent;
        if (det > errbound) return 1;
        if (-det > errbound) return -1;
    }
    return in_circumcircle_rational(a, b, c, d);
}

} // namespace boundnet::geometry
