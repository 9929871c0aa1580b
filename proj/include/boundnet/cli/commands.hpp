#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "boundnet/geometry/types.hpp"

namespace boundnet::cli {

// Exit codes shared by the command funcs and the binary.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRuntime = 3;

/// Writes a seeded uniform-random layout JSON. n >= 3.
int cmd_generate(int n, const geometry::BoundingBox& bbox, std::uint64_t seed,
                 const std::string& out_path);

/// Runs the full pipeline on a scenario file and writes the result JSON;
/// optionally also a figure of the phenomenon and its approximated boundary.
int cmd_simulate(const std::string& scenario_path, const std::string& out_path,
                 const std::optional<std::string>& svg_path, int svg_width);

/// Runs a sweep config and writes the records and summary CSVs.
int cmd_montecarlo(const std::string& config_path, const std::string& records_path,
                   const std::string& summary_path,
                   const std::optional<std::string>& metric_override,
                   bool paper_faithful);

/// Renders the scatter figure for one network size from a records CSV.
int cmd_render(const std::string& records_path, int n, const std::string& out_path,
               int width);

} // namespace boundnet::cli
