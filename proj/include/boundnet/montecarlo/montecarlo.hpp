#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "boundnet/geometry/layout.hpp"
#include "boundnet/montecarlo/rng.hpp"

namespace boundnet::montecarlo {

using geometry::BoundingBox;
using geometry::SensorLayout;

/// How "reporting" nodes are counted per trial: the designated transmitters
/// only, or both endpoints of every boundary pair.
enum class ReportingMetric { Transmitters, IncidentNodes };

/// Sweep over network sizes and random activation patterns. For each n,
/// `layouts_per_count` random layouts are drawn in `bbox`; on each layout
/// every activation size k = 1..n is tried with `patterns_per_activation`
/// random k-subsets. Sizes above `reduced_above` use the reduced counts
/// unless `paper_faithful` is set.
struct SweepConfig {
    std::vector<int> node_counts;
    int layouts_per_count = 100;
    int patterns_per_activation = 100;
    int reduced_layouts = 20;
    int reduced_patterns = 20;
    int reduced_above = 100;
    bool paper_faithful = false;
    double theta = 0.5;
    std::uint64_t seed = 0;
    BoundingBox bbox;
    ReportingMetric metric = ReportingMetric::IncidentNodes;

    void validate() const; // throws InvalidArgument / SchemaError-free check
    int effective_layouts(int n) const;
    int effective_patterns(int n) const;
};

/// One (layout, activation size, pattern) evaluation.
struct TrialRecord {
    int n = 0;
    int layout_index = 0;
    int activation_size = 0;
    int pattern_index = 0;
    double observing_fraction = 0.0;      // k / n
    double reporting_fraction = 0.0;      // reporters / n per configured metric
    double naive_sensing_fraction = 0.0;  // m / n for the second naive algorithm
};

struct SweepSummaryRow {
    int n = 0;
    std::int64_t trials = 0;
    double max_reporting = 0.0;
    double mean_reporting = 0.0;
};

/// Per-n aggregates plus the degenerate-layout redraw log.
struct SweepSummary {
    std::vector<SweepSummaryRow> rows; // ordered as config.node_counts
    std::int64_t layout_redraws = 0;

    const SweepSummaryRow* row(int n) const;
};

using RecordSink = std::function<void(const TrialRecord&)>;

/// Streams every trial of the sweep into `sink` (loop order: node count,
/// layout, activation size, pattern) and returns the summary. Deterministic:
/// the same config yields the identical record stream, independent of any
/// previous runs, because each trial draws from its own counter-derived
/// substream.
SweepSummary run_sweep(const SweepConfig& config, const RecordSink& sink);

/// Convenience form that materializes the records.
std::pair<std::vector<TrialRecord>, SweepSummary> run_sweep(const SweepConfig& config);

/// Recomputes per-n max/mean from a record list. Throws EmptyInput on an
/// empty list. run_sweep's incremental summary equals summarize() over its
/// records (tested).
SweepSummary summarize(const std::vector<TrialRecord>& records);

/// Draws one seeded uniform layout of n sites in bbox, re-drawing (with the
/// next attempt substream) while the draw is degenerate: duplicate sites or
/// an all-collinear set. `redraws`, when given, accumulates the number of
/// rejected draws.
SensorLayout random_layout(int n, const BoundingBox& bbox, std::uint64_t root_seed,
                           int layout_index, std::int64_t* redraws = nullptr);

} // namespace boundnet::montecarlo
