#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "boundnet/field/field.hpp"
#include "boundnet/geometry/voronoi.hpp"

namespace boundnet::protocol {

using field::Readings;
using geometry::NodeId;
using geometry::Segment;
using geometry::Triangulation;
using geometry::VoronoiDiagram;

/// Per-message costs: beta for a sensor-to-station transmission, epsilon_unit
/// for one sensor-to-neighbor message. The interesting regime is
/// epsilon_unit << beta.
struct CostModel {
    double beta = 1.0;
    double epsilon_unit = 0.0;

    CostModel() = default;
    CostModel(double b, double eps);
};

/// One reported boundary segment: the neighbor pair, its clipped Voronoi
/// segment, and the node that transmits it.
struct BoundarySegment {
    std::pair<NodeId, NodeId> pair; // i < j
    Segment geom;
    NodeId transmitter;
};

/// Outcome of one detection round over the whole network.
struct BoundaryResult {
    std::vector<BoundarySegment> segments;  // sorted by pair key
    std::int64_t local_messages = 0;        // 2 per Delaunay edge
    std::int64_t remote_messages = 0;       // |transmitters|
    std::vector<NodeId> incident_nodes;     // endpoints of boundary pairs, sorted
    std::vector<NodeId> transmitters;       // sorted
};

/// Runs one round of the local detection protocol: every node exchanges its
/// reading with each Delaunay neighbor (2 messages per edge); an edge (i,j)
/// becomes a boundary pair iff |psi_i - psi_j| > theta strictly and its
/// clipped Voronoi segment exists; the endpoint with the larger reading
/// (ties: smaller id) transmits. Each transmitter sends one remote message
/// carrying all of its segments.
///
/// Throws LengthMismatch if readings do not match the layout size and
/// InvalidArgument for theta outside [0,1].
BoundaryResult detect_boundary(const Triangulation& tri,
                               const VoronoiDiagram& vor,
                               const Readings& readings, double theta);

/// Station-side aggregation: just the segment geometries, ordered by pair key.
std::vector<Segment> approximate_boundary_polyline(const BoundaryResult& result);

/// First naive algorithm: every node reports. Cost n*beta.
double cost_naive_full(int n, const CostModel& cost);

/// Second naive algorithm: nodes with psi > sense_threshold (strict) report.
/// Returns (m, m*beta).
std::pair<int, double> cost_naive_sensing(const Readings& readings,
                                          double sense_threshold,
                                          const CostModel& cost);

/// Proposed algorithm: remote_messages*beta + local_messages*epsilon_unit.
double cost_proposed(const BoundaryResult& result, const CostModel& cost);

} // namespace boundnet::protocol
