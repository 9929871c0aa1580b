#include "boundnet/protocol/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "boundnet/kernels/kernels.hpp"

namespace boundnet::protocol {

CostModel::CostModel(double b, double eps) : beta(b), epsilon_unit(eps) {
    if (!(beta > 0.0) || !std::isfinite(beta)) {
        throw InvalidArgument("CostModel.beta must be positive");
    }
    if (!(epsilon_unit >= 0.0) || !std::isfinite(epsilon_unit)) {
        throw InvalidArgument("CostModel.epsilon_unit must be non-negative");
    }
}

BoundaryResult detect_boundary(const Triangulation& tri, const VoronoiDiagram& vor,
                               const Readings& readings, double theta) {
    const auto n = static_cast<std::size_t>(tri.layout().size());
    if (readings.size() != n) {
        throw LengthMismatch("detect_boundary: " + std::to_string(readings.size()) +
                             " readings for " + std::to_string(n) + " nodes");
    }
    if (!(theta >= 0.0 && theta <= 1.0)) {
        throw InvalidArgument("detect_boundary: theta must lie in [0,1]");
    }

    const auto& edges = tri.edges();
    std::vector<uint8_t> over(edges.size());
    kernels::classify_edges(readings.data(), tri.edge_i().data(),
                            tri.edge_j().data(), edges.size(), theta,
                            over.data());

    BoundaryResult result;
    result.local_messages = 2 * static_cast<std::int64_t>(edges.size());
    std::vector<uint8_t> incident(n, 0);
    std::vector<uint8_t> transmits(n, 0);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        if (!over[e]) continue;
        const auto [i, j] = edges[e];
        const Segment* seg = vor.segment(i, j);
        if (seg == nullptr) continue;
        const double ri = readings[static_cast<std::size_t>(i)];
        const double rj = readings[static_cast<std::size_t>(j)];
        const NodeId tx = ri > rj ? i : (rj > ri ? j : std::min(i, j));
        result.segments.push_back({{i, j}, *seg, tx});
        incident[static_cast<std::size_t>(i)] = 1;
        incident[static_cast<std::size_t>(j)] = 1;
        transmits[static_cast<std::size_t>(tx)] = 1;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (incident[v]) result.incident_nodes.push_back(static_cast<NodeId>(v));
        if (transmits[v]) result.transmitters.push_back(static_cast<NodeId>(v));
    }
    result.remote_messages = static_cast<std::int64_t>(result.transmitters.size());
    return result;
}

std::vector<Segment> approximate_boundary_polyline(const BoundaryResult& result) {
    std::vector<Segment> out;
    out.reserve(result.segments.size());
    for (const auto& s : result.segments) out.push_back(s.geom);
    return out;
}

double cost_naive_full(int n, const CostModel& cost) {
    if (n < 0) throw InvalidArgument("cost_naive_full: negative node count");
    return static_cast<double>(n) * cost.beta;
}

std::pair<int, double> cost_naive_sensing(const Readings& readings,
                                          double sense_threshold,
                                          const CostModel& cost) {
    if (!(sense_threshold >= 0.0 && sense_threshold <= 1.0)) {
        throw InvalidArgument("cost_naive_sensing: sense_threshold must lie in [0,1]");
    }
    int m = 0;
    for (double psi : readings) {
        if (psi > sense_threshold) ++m;
    }
    return {m, static_cast<double>(m) * cost.beta};
}

double cost_proposed(const BoundaryResult& result, const CostModel& cost) {
    return static_cast<double>(result.remote_messages) * cost.beta +
           static_cast<double>(result.local_messages) * cost.epsilon_unit;
}

} // namespace boundnet::protocol
