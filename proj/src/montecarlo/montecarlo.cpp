#include "boundnet/montecarlo/montecarlo.hpp"

#include <algorithm>
#include <string>

#include "boundnet/geometry/delaunay.hpp"
#include "boundnet/geometry/predicates.hpp"
#include "boundnet/geometry/voronoi.hpp"
#include "boundnet/kernels/kernels.hpp"

namespace boundnet::montecarlo {

using geometry::NodeId;
using geometry::Point2;

void SweepConfig::validate() const {
    if (node_counts.empty()) {
        throw InvalidArgument("SweepConfig: node_counts must not be empty");
    }
    for (int n : node_counts) {
        if (n < 3) {
            throw InvalidArgument("SweepConfig: node counts must be >= 3, got " +
                                  std::to_string(n));
        }
    }
    if (layouts_per_count < 1 || patterns_per_activation < 1 ||
        reduced_layouts < 1 || reduced_patterns < 1) {
        throw InvalidArgument("SweepConfig: sampling counts must be >= 1");
    }
    if (!(theta >= 0.0 && theta < 1.0)) {
        throw InvalidArgument("SweepConfig: theta must lie in [0,1)");
    }
}

int SweepConfig::effective_layouts(int n) const {
    return (n > reduced_above && !paper_faithful) ? reduced_layouts
                                                  : layouts_per_count;
}

int SweepConfig::effective_patterns(int n) const {
    return (n > reduced_above && !paper_faithful) ? reduced_patterns
                                                  : patterns_per_activation;
}

const SweepSummaryRow* SweepSummary::row(int n) const {
    for (const auto& r : rows) {
        if (r.n == n) return &r;
    }
    return nullptr;
}

SensorLayout random_layout(int n, const BoundingBox& bbox, std::uint64_t root_seed,
                           int layout_index, std::int64_t* redraws) {
    if (n < 3) throw InvalidArgument("random_layout: need n >= 3");
    constexpr int kMaxAttempts = 64;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        SplitMix64 g = substream(root_seed, StreamPhase::Layout,
                                 static_cast<std::uint64_t>(n),
                                 static_cast<std::uint64_t>(layout_index),
                                 static_cast<std::uint64_t>(attempt), 0);
        std::vector<Point2> pts;
        pts.reserve(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            const double x = bbox.min.x + g.uniform01() * bbox.width();
            const double y = bbox.min.y + g.uniform01() * bbox.height();
            pts.emplace_back(x, y);
        }
        try {
            SensorLayout layout(std::move(pts), bbox);
            bool noncollinear = false;
            for (int k = 2; k < n && !noncollinear; ++k) {
                noncollinear = geometry::orient2d(layout.point(0), layout.point(1),
                                                  layout.point(k)) != 0;
            }
            if (!noncollinear) {
                if (redraws) ++*redraws;
                continue;
            }
            return layout;
        } catch (const DuplicateSite&) {
            if (redraws) ++*redraws;
        }
    }
    throw Error("random_layout: " + std::to_string(kMaxAttempts) +
                " degenerate draws in a row (n=" + std::to_string(n) + ")");
}

SweepSummary run_sweep(const SweepConfig& config, const RecordSink& sink) {
    config.validate();

    SweepSummary summary;
    for (int n : config.node_counts) {
        const int layouts = config.effective_layouts(n);
        const int patterns = config.effective_patterns(n);
        const auto un = static_cast<std::size_t>(n);

        SweepSummaryRow row;
        row.n = n;
        double sum = 0.0;

        // per-trial scratch, reused across the whole count
        std::vector<double> readings(un, 0.0);
        std::vector<int> perm(un);
        std::vector<int> swap_with(un);
        std::vector<int> mark_inc(un, 0);
        std::vector<int> mark_tx(un, 0);
        int epoch = 0;

        for (int li = 0; li < layouts; ++li) {
            const SensorLayout layout = random_layout(n, config.bbox, config.seed,
                                                      li, &summary.layout_redraws);
            const geometry::Triangulation tri = geometry::delaunay(layout);
            const geometry::VoronoiDiagram vor = geometry::voronoi(tri);

            // only edges whose Voronoi segment survived clipping can report
            std::vector<int32_t> ei, ej;
            ei.reserve(tri.edges().size());
            ej.reserve(tri.edges().size());
            for (const auto& [i, j] : tri.edges()) {
                if (vor.has_segment(i, j)) {
                    ei.push_back(i);
                    ej.push_back(j);
                }
            }
            std::vector<uint8_t> mask(ei.size());

            for (std::size_t i = 0; i < un; ++i) perm[i] = static_cast<int>(i);

            for (int k = 1; k <= n; ++k) {
                for (int pi = 0; pi < patterns; ++pi) {
                    SplitMix64 g = substream(config.seed, StreamPhase::Pattern,
                                             static_cast<std::uint64_t>(n),
                                             static_cast<std::uint64_t>(li),
                                             static_cast<std::uint64_t>(k),
                                             static_cast<std::uint64_t>(pi));
                    // k-subset via partial Fisher-Yates, undone afterwards so
                    // every trial starts from the identity permutation
                    for (int t = 0; t < k; ++t) {
                        const int r =
                            t + static_cast<int>(g.below(static_cast<std::uint64_t>(n - t)));
                        swap_with[static_cast<std::size_t>(t)] = r;
                        std::swap(perm[static_cast<std::size_t>(t)],
                                  perm[static_cast<std::size_t>(r)]);
                    }
                    for (int t = 0; t < k; ++t) {
                        readings[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])] = 1.0;
                    }

                    kernels::classify_edges(readings.data(), ei.data(), ej.data(),
                                            mask.size(), config.theta, mask.data());
                    ++epoch;
                    int inc_count = 0;
                    int tx_count = 0;
                    for (std::size_t e = 0; e < mask.size(); ++e) {
                        if (!mask[e]) continue;
                        const auto i = static_cast<std::size_t>(ei[e]);
                        const auto j = static_cast<std::size_t>(ej[e]);
                        if (mark_inc[i] != epoch) {
                            mark_inc[i] = epoch;
                            ++inc_count;
                        }
                        if (mark_inc[j] != epoch) {
                            mark_inc[j] = epoch;
                            ++inc_count;
                        }
                        const std::size_t tx = readings[i] > readings[j] ? i : j;
                        if (mark_tx[tx] != epoch) {
                            mark_tx[tx] = epoch;
                            ++tx_count;
                        }
                    }
                    const int reporters = config.metric == ReportingMetric::IncidentNodes
                                              ? inc_count
                                              : tx_count;

                    TrialRecord rec;
                    rec.n = n;
                    rec.layout_index = li;
                    rec.activation_size = k;
                    rec.pattern_index = pi;
                    rec.observing_fraction = static_cast<double>(k) / n;
                    rec.reporting_fraction = static_cast<double>(reporters) / n;
                    // binary readings: exactly the k active nodes clear any
                    // sense threshold below 1
                    rec.naive_sensing_fraction = static_cast<double>(k) / n;
                    sink(rec);

                    ++row.trials;
                    sum += rec.reporting_fraction;
                    row.max_reporting = std::max(row.max_reporting, rec.reporting_fraction);

                    for (int t = 0; t < k; ++t) {
                        readings[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])] = 0.0;
                    }
                    for (int t = k - 1; t >= 0; --t) {
                        std::swap(perm[static_cast<std::size_t>(t)],
                                  perm[static_cast<std::size_t>(swap_with[static_cast<std::size_t>(t)])]);
                    }
                }
            }
        }
        row.mean_reporting = row.trials > 0 ? sum / static_cast<double>(row.trials) : 0.0;
        summary.rows.push_back(row);
    }
    return summary;
}

std::pair<std::vector<TrialRecord>, SweepSummary> run_sweep(const SweepConfig& config) {
    std::vector<TrialRecord> records;
    SweepSummary summary =
        run_sweep(config, [&](const TrialRecord& r) { records.push_back(r); });
    return {std::move(records), std::move(summary)};
}

SweepSummary summarize(const std::vector<TrialRecord>& records) {
    if (records.empty()) {
        throw EmptyInput("summarize: no records");
    }
    SweepSummary summary;
    std::vector<double> sums;
    for (const TrialRecord& r : records) {
        std::size_t idx = summary.rows.size();
        for (std::size_t i = 0; i < summary.rows.size(); ++i) {
            if (summary.rows[i].n == r.n) {
                idx = i;
                break;
            }
        }
        if (idx == summary.rows.size()) {
            summary.rows.push_back(SweepSummaryRow{r.n, 0, 0.0, 0.0});
            sums.push_back(0.0);
        }
        SweepSummaryRow& row = summary.rows[idx];
        ++row.trials;
        sums[idx] += r.reporting_fraction;
        row.max_reporting = std::max(row.max_reporting, r.reporting_fraction);
    }
    for (std::size_t i = 0; i < summary.rows.size(); ++i) {
        summary.rows[i].mean_reporting =
            sums[i] / static_cast<double>(summary.rows[i].trials);
    }
    return summary;
}

} // namespace boundnet::montecarlo
