#include "boundnet/geometry/layout.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace boundnet::geometry {

SensorLayout::SensorLayout(std::vector<Point2> points, BoundingBox bbox)
    : points_(std::move(points)), bbox_(bbox) {
    const int n = static_cast<int>(points_.size());
    for (int i = 0; i < n; ++i) {
        if (!bbox_.contains(points_[static_cast<size_t>(i)])) {
            throw InvalidArgument("SensorLayout: point " + std::to_string(i) +
                                  " lies outside the bounding box");
        }
    }

    // coincident-site check via a sorted index view
    std::vector<int> order(points_.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const Point2& pa = points_[static_cast<size_t>(a)];
        const Point2& pb = points_[static_cast<size_t>(b)];
        return pa.x != pb.x ? pa.x < pb.x : pa.y < pb.y;
    });
    for (size_t k = 1; k < order.size(); ++k) {
        if (points_[static_cast<size_t>(order[k - 1])] ==
            points_[static_cast<size_t>(order[k])]) {
            throw DuplicateSite("SensorLayout: nodes " +
                                std::to_string(std::min(order[k - 1], order[k])) +
                                " and " +
                                std::to_string(std::max(order[k - 1], order[k])) +
                                " coincide");
        }
    }

    xs_.reserve(points_.size());
    ys_.reserve(points_.size());
    for (const Point2& p : points_) {
        xs_.push_back(p.x);
        ys_.push_back(p.y);
    }
}

} // namespace boundnet::geometry
