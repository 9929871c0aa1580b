#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "boundnet/geometry/delaunay.hpp"
#include "boundnet/geometry/types.hpp"

namespace boundnet::geometry {

/// Voronoi dual of a triangulation, clipped to the layout's bounding box.
///
/// For every Delaunay edge (i, j) the diagram may hold one clipped bisector
/// segment: the shared boundary of cells i and j. Edges whose bisector is
/// clipped away entirely (or degenerates below 1e-12) have no entry. Cells
/// are the convex site polygons clipped to the box.
class VoronoiDiagram {
public:
    using EdgeKey = std::pair<NodeId, NodeId>; // i < j

    const SensorLayout& layout() const { return *layout_; }
    const std::map<EdgeKey, Segment>& segments() const { return segments_; }
    const std::vector<std::vector<Point2>>& cells() const { return cells_; }

    bool has_segment(NodeId i, NodeId j) const;
    const Segment* segment(NodeId i, NodeId j) const;

private:
    friend VoronoiDiagram voronoi(const Triangulation&);

    const SensorLayout* layout_ = nullptr;
    std::map<EdgeKey, Segment> segments_;
    std::vector<std::vector<Point2>> cells_;
};

/// Builds the clipped Voronoi diagram. Interior Delaunay edges produce the
/// bisector segment between the two adjacent circumcenters; hull edges
/// produce the outward bisector ray from the single circumcenter. Both are
/// clipped to the bounding box; results shorter than 1e-12 are dropped.
VoronoiDiagram voronoi(const Triangulation& tri);

} // namespace boundnet::geometry
