#pragma once

#include <vector>

#include "boundnet/geometry/types.hpp"

namespace boundnet::geometry {

/// Node ids are indices into the layout's point list.
using NodeId = int;

/// Immutable set of sensor positions inside a rectangular domain.
/// Construction rejects out-of-box and exactly coincident points, so every
/// NodeId names a distinct in-domain site.
class SensorLayout {
public:
    SensorLayout(std::vector<Point2> points, BoundingBox bbox);

    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<Point2>& points() const { return points_; }
    const Point2& point(NodeId id) const { return points_[static_cast<size_t>(id)]; }
    const BoundingBox& bbox() const { return bbox_; }

    // structure-of-arrays mirrors for the data-parallel kernels
    const std::vector<double>& xs() const { return xs_; }
    const std::vector<double>& ys() const { return ys_; }

private:
    std::vector<Point2> points_;
    BoundingBox bbox_;
    std::vector<double> xs_;
    std::vector<double> ys_;
};

} // namespace boundnet::geometry
