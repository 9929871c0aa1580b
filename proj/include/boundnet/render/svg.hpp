#pragma once

#include <string>
#include <variant>
#include <vector>

#include "boundnet/geometry/types.hpp"
#include "boundnet/montecarlo/montecarlo.hpp"

namespace boundnet::render {

using geometry::BoundingBox;
using geometry::Point2;
using geometry::Segment;

// Scene layers, drawn in order.
struct Sites {
    std::vector<Point2> points;
};
struct DelaunayEdges {
    std::vector<Segment> segments;
};
struct VoronoiSegments {
    std::vector<Segment> segments;
};
/// Two-level shading of a phenomenon: the background takes the outside
/// level, the region the inside level.
struct FieldShading {
    struct HalfPlaneArea {
        Point2 normal;
        double offset;
    };
    struct DiskArea {
        Point2 center;
        double radius;
    };
    std::variant<HalfPlaneArea, DiskArea> area;
    double inside_level = 0.8;  // psi used to pick the fill gray
    double outside_level = 0.1;
};
/// The exact phenomenon boundary, drawn solid black.
struct TrueBoundary {
    struct Line {
        Point2 normal;
        double offset;
    };
    struct Circle {
        Point2 center;
        double radius;
    };
    std::variant<Line, Circle> shape;
};
/// The reported approximation, drawn dashed.
struct ApproxBoundary {
    std::vector<Segment> segments;
};

using Layer = std::variant<Sites, DelaunayEdges, VoronoiSegments, FieldShading,
                           TrueBoundary, ApproxBoundary>;

struct Scene {
    BoundingBox bbox;
    std::vector<Layer> layers;
};

/// Renders the scene as a standalone SVG 1.1 document. The bounding box maps
/// onto a viewport of the given width, aspect ratio preserved; geometry is
/// clipped to the box and coordinates are written with 6 fixed decimals, so
/// identical scenes produce byte-identical documents.
std::string scene_to_svg(const Scene& scene, int width_px);

/// Scatter of (observing %, reporting %) for one network size, with the two
/// naive-algorithm reference lines: horizontal at 100 and the diagonal.
/// Throws EmptyAfterFilter if no record matches n_filter.
std::string scatter_to_svg(const std::vector<montecarlo::TrialRecord>& records,
                           int n_filter, int width_px);

} // namespace boundnet::render
