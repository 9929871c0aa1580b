#pragma once

#include <cmath>

#include "boundnet/errors.hpp"

namespace boundnet::geometry {

/// A point in the 2D domain. Coordinates are always finite.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    Point2() = default;
    Point2(double px, double py) : x(px), y(py) {
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw InvalidArgument("Point2: non-finite coordinate");
        }
    }

    friend bool operator==(const Point2& a, const Point2& b) {
        return a.x == b.x && a.y == b.y;
    }
};

inline double dist(const Point2& a, const Point2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Axis-aligned rectangle with strictly positive area.
struct BoundingBox {
    Point2 min;
    Point2 max;

    BoundingBox() : min(0.0, 0.0), max(1.0, 1.0) {}
    BoundingBox(Point2 lo, Point2 hi) : min(lo), max(hi) {
        if (!(min.x < max.x) || !(min.y < max.y)) {
            throw InvalidArgument("BoundingBox: min must be strictly below max");
        }
    }

    double width() const { return max.x - min.x; }
    double height() const { return max.y - min.y; }

    bool contains(const Point2& p, double tol = 0.0) const {
        return p.x >= min.x - tol && p.x <= max.x + tol &&
               p.y >= min.y - tol && p.y <= max.y + tol;
    }
};

/// A finite line segment.
struct Segment {
    Point2 a;
    Point2 b;
};

} // namespace boundnet::geometry
