#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "boundnet/geometry/layout.hpp"

namespace boundnet::geometry {

/// Delaunay triangulation of a sensor layout. Triangles are stored
/// counter-clockwise with the smallest vertex id first and the list sorted
/// lexicographically; the edge set is derived from the triangle sides and
/// defines the neighbor relation of the network. The referenced layout must
/// outlive the triangulation.
class Triangulation {
public:
    const SensorLayout& layout() const { return *layout_; }
    const std::vector<std::array<NodeId, 3>>& triangles() const { return triangles_; }

    /// Unordered neighbor pairs, each stored as (i, j) with i < j, sorted.
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

    // flat copies of the edge endpoints for the data-parallel kernels
    const std::vector<int32_t>& edge_i() const { return edge_i_; }
    const std::vector<int32_t>& edge_j() const { return edge_j_; }

private:
    friend Triangulation delaunay(const SensorLayout&);

    const SensorLayout* layout_ = nullptr;
    std::vector<std::array<NodeId, 3>> triangles_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
    std::vector<int32_t> edge_i_;
    std::vector<int32_t> edge_j_;
};

/// Computes the Delaunay triangulation by incremental Bowyer-Watson
/// insertion in NodeId order inside a conceptual super-triangle whose
/// vertices lie at infinity (so hull-adjacent circumcircle tests stay
/// exact); the super vertices are removed at the end. Cocircular ties are
/// normalized so that of the two candidate diagonals the one whose smaller
/// endpoint id is smallest survives.
///
/// Throws DegenerateInput for fewer than 3 sites or an all-collinear set.
Triangulation delaunay(const SensorLayout& layout);

} // namespace boundnet::geometry
