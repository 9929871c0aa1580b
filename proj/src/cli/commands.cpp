#include "boundnet/cli/commands.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "boundnet/errors.hpp"
#include "boundnet/field/field.hpp"
#include "boundnet/geometry/delaunay.hpp"
#include "boundnet/geometry/voronoi.hpp"
#include "boundnet/io/json_io.hpp"
#include "boundnet/montecarlo/montecarlo.hpp"
#include "boundnet/protocol/protocol.hpp"
#include "boundnet/render/svg.hpp"

namespace boundnet::cli {

namespace {

int report(const std::exception& e, int code) {
    std::cerr << "error: " << e.what() << "\n";
    return code;
}

struct FieldLayers {
    std::optional<render::FieldShading> shading;
    std::optional<render::TrueBoundary> boundary;
};

// Unwraps ScaledGray so the figure shows the underlying region with its
// scaled gray levels; activation fields have no spatial shape to draw.
FieldLayers field_layers(const field::PhenomenonField& f, double scale = 1.0) {
    FieldLayers out;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, field::HalfPlane>) {
                render::FieldShading sh;
                sh.area = render::FieldShading::HalfPlaneArea{v.normal, v.offset};
                sh.inside_level = scale * v.inside;
                sh.outside_level = scale * v.outside;
                out.shading = sh;
                render::TrueBoundary tb;
                tb.shape = render::TrueBoundary::Line{v.normal, v.offset};
                out.boundary = tb;
            } else if constexpr (std::is_same_v<T, field::Disk>) {
                render::FieldShading sh;
                sh.area = render::FieldShading::DiskArea{v.center, v.radius};
                sh.inside_level = scale * v.inside;
                sh.outside_level = scale * v.outside;
                out.shading = sh;
                render::TrueBoundary tb;
                tb.shape = render::TrueBoundary::Circle{v.center, v.radius};
                out.boundary = tb;
            } else if constexpr (std::is_same_v<T, field::ScaledGray>) {
                out = field_layers(*v.base, scale * v.brightness);
            }
        },
        f.variant());
    return out;
}

} // namespace

int cmd_generate(int n, const geometry::BoundingBox& bbox, std::uint64_t seed,
                 const std::string& out_path) {
    try {
        if (n < 3) {
            std::cerr << "error: need at least 3 nodes, got " << n << "\n";
            return kExitUsage;
        }
        std::int64_t redraws = 0;
        const auto layout = montecarlo::random_layout(n, bbox, seed, 0, &redraws);
        if (redraws > 0) {
            std::cerr << "note: re-drew " << redraws << " degenerate layout(s)\n";
        }
        io::write_file_atomic(out_path, io::layout_to_json(layout));
        std::cout << out_path << "\n";
        return kExitOk;
    } catch (const InvalidArgument& e) {
        return report(e, kExitUsage);
    } catch (const Error& e) {
        return report(e, kExitRuntime);
    }
}

int cmd_simulate(const std::string& scenario_path, const std::string& out_path,
                 const std::optional<std::string>& svg_path, int svg_width) {
    try {
        const std::string base_dir =
            std::filesystem::path(scenario_path).parent_path().string();
        const io::Scenario sc =
            io::scenario_from_json(io::read_file(scenario_path), base_dir);

        const auto readings = field::sample(*sc.field, *sc.layout);
        const auto tri = geometry::delaunay(*sc.layout);
        const auto vor = geometry::voronoi(tri);
        const auto result = protocol::detect_boundary(tri, vor, readings, sc.theta);
        const auto [m, sensing_cost] =
            protocol::cost_naive_sensing(readings, sc.sense_threshold, sc.cost);
        (void)sensing_cost;

        io::write_file_atomic(out_path,
                              io::result_to_json(result, sc.layout->size(), sc.cost, m));

        if (svg_path) {
            render::Scene scene;
            scene.bbox = sc.layout->bbox();
            const FieldLayers fl = field_layers(*sc.field);
            if (fl.shading) scene.layers.emplace_back(*fl.shading);
            render::VoronoiSegments vs;
            for (const auto& [edge, seg] : vor.segments()) vs.segments.push_back(seg);
            scene.layers.emplace_back(std::move(vs));
            scene.layers.emplace_back(render::Sites{sc.layout->points()});
            if (fl.boundary) scene.layers.emplace_back(*fl.boundary);
            render::ApproxBoundary ab;
            ab.segments = protocol::approximate_boundary_polyline(result);
            scene.layers.emplace_back(std::move(ab));
            io::write_file_atomic(*svg_path, render::scene_to_svg(scene, svg_width));
        }
        return kExitOk;
    } catch (const SchemaError& e) {
        return report(e, kExitUsage);
    } catch (const InvalidArgument& e) {
        return report(e, kExitUsage);
    } catch (const Error& e) {
        return report(e, kExitRuntime);
    }
}

int cmd_montecarlo(const std::string& config_path, const std::string& records_path,
                   const std::string& summary_path,
                   const std::optional<std::string>& metric_override,
                   bool paper_faithful) {
    try {
        montecarlo::SweepConfig cfg =
            io::sweep_config_from_json(io::read_file(config_path));
        if (metric_override) {
            if (*metric_override == "incident") {
                cfg.metric = montecarlo::ReportingMetric::IncidentNodes;
            } else if (*metric_override == "transmitters") {
                cfg.metric = montecarlo::ReportingMetric::Transmitters;
            } else {
                std::cerr << "error: --metric expects 'incident' or 'transmitters'\n";
                return kExitUsage;
            }
        }
        if (paper_faithful) cfg.paper_faithful = true;

        // records can be large; stream them to the temp file, then rename
        const std::string tmp = records_path + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw IoError("cannot open " + tmp + " for writing");
            out << io::record_csv_header();
            const montecarlo::SweepSummary summary = montecarlo::run_sweep(
                cfg, [&](const montecarlo::TrialRecord& r) { out << io::record_to_csv(r); });
            out.flush();
            if (!out) {
                std::filesystem::remove(tmp);
                throw IoError("failed writing " + tmp);
            }
            out.close();
            io::write_file_atomic(summary_path, io::summary_to_csv(summary));
            if (summary.layout_redraws > 0) {
                std::cerr << "note: re-drew " << summary.layout_redraws
                          << " degenerate layout(s)\n";
            }
        }
        std::error_code ec;
        std::filesystem::rename(tmp, records_path, ec);
        if (ec) {
            std::filesystem::remove(tmp);
            throw IoError("failed to move " + tmp + " into place: " + ec.message());
        }
        return kExitOk;
    } catch (const SchemaError& e) {
        return report(e, kExitUsage);
    } catch (const InvalidArgument& e) {
        return report(e, kExitUsage);
    } catch (const Error& e) {
        return report(e, kExitRuntime);
    }
}

int cmd_render(const std::string& records_path, int n, const std::string& out_path,
               int width) {
    try {
        const auto records = io::records_from_csv(io::read_file(records_path));
        const std::string svg = render::scatter_to_svg(records, n, width);
        io::write_file_atomic(out_path, svg);
        return kExitOk;
    } catch (const SchemaError& e) {
        return report(e, kExitUsage);
    } catch (const EmptyAfterFilter& e) {
        return report(e, kExitUsage);
    } catch (const InvalidArgument& e) {
        return report(e, kExitUsage);
    } catch (const Error& e) {
        return report(e, kExitRuntime);
    }
}

} // namespace boundnet::cli
