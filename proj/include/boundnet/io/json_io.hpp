#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "boundnet/field/field.hpp"
#include "boundnet/geometry/voronoi.hpp"
#include "boundnet/montecarlo/montecarlo.hpp"
#include "boundnet/protocol/protocol.hpp"

namespace boundnet::io {

using geometry::BoundingBox;
using geometry::SensorLayout;
using geometry::Triangulation;
using geometry::VoronoiDiagram;

// Layout files: { "bbox": [minx,miny,maxx,maxy], "points": [[x,y], ...] }
std::string layout_to_json(const SensorLayout& layout);
SensorLayout layout_from_json(const std::string& text);

// Geometry export: { "triangles": [[i,j,k],...],
//                    "segments": {"i-j": [[x1,y1],[x2,y2]], ...} } with i < j.
std::string geometry_to_json(const Triangulation& tri, const VoronoiDiagram& vor);

// Field descriptions: { "type": "halfplane"|"disk"|"scaledgray"|"activation", ... }
field::PhenomenonField field_from_json(const std::string& text);
std::string field_to_json(const field::PhenomenonField& f);

/// A packaged simulation input.
struct Scenario {
    std::shared_ptr<SensorLayout> layout;
    std::shared_ptr<field::PhenomenonField> field;
    double theta = 0.5;
    protocol::CostModel cost;
    double sense_threshold = 0.5;
    std::optional<std::uint64_t> seed;
};

/// Parses a scenario file. `base_dir` resolves a relative "layout_file"
/// reference. Schema violations throw SchemaError with the field path.
Scenario scenario_from_json(const std::string& text, const std::string& base_dir);

/// Detection result export, including the three algorithm costs.
std::string result_to_json(const protocol::BoundaryResult& result, int n,
                           const protocol::CostModel& cost, int naive_sensing_m);

// Sweep config files (see SweepConfig for the field semantics).
montecarlo::SweepConfig sweep_config_from_json(const std::string& text);

// CSV: records "n,layout,activation_size,pattern,observing_frac,reporting_frac,
// naive_sensing_frac"; summary "n,max_reporting_pct,mean_reporting_pct".
std::string record_csv_header();
std::string record_to_csv(const montecarlo::TrialRecord& r);
std::string summary_to_csv(const montecarlo::SweepSummary& s);
std::vector<montecarlo::TrialRecord> records_from_csv(const std::string& text);

// Whole-file helpers. write_file_atomic writes to a sibling temp file and
// renames, so a failed run never leaves a partial output.
std::string read_file(const std::string& path);
void write_file_atomic(const std::string& path, const std::string& content);

} // namespace boundnet::io
