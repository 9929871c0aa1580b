#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boundnet/cli/commands.hpp"
#include "boundnet/geometry/types.hpp"

int main(int argc, char** argv) {
    using namespace boundnet;

    CLI::App app{"boundnet: sensor-network boundary approximation simulator"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "write a seeded random layout");
    int gen_n = 0;
    std::vector<double> gen_bbox = {0.0, 0.0, 1.0, 1.0};
    std::uint64_t gen_seed = 0;
    std::string gen_out = "layout.json";
    gen->add_option("-n,--nodes", gen_n, "number of sensors (>= 3)")->required();
    gen->add_option("--bbox", gen_bbox, "domain minx miny maxx maxy")
        ->expected(4);
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("-o,--out", gen_out, "output layout file");

    // simulate
    auto* sim = app.add_subcommand("simulate", "run one scenario end to end");
    std::string sim_scenario;
    std::string sim_out = "result.json";
    std::string sim_svg;
    int sim_width = 800;
    sim->add_option("scenario", sim_scenario, "scenario JSON file")->required();
    sim->add_option("-o,--out", sim_out, "output result file");
    sim->add_option("--svg", sim_svg, "also write a figure to this path");
    sim->add_option("--width", sim_width, "figure width in pixels");

    // montecarlo
    auto* mc = app.add_subcommand("montecarlo", "run a sweep config");
    std::string mc_config;
    std::string mc_records = "records.csv";
    std::string mc_summary = "summary.csv";
    std::string mc_metric;
    bool mc_paper = false;
    mc->add_option("config", mc_config, "sweep config JSON file")->required();
    mc->add_option("--records", mc_records, "records CSV output");
    mc->add_option("--summary", mc_summary, "summary CSV output");
    mc->add_option("--metric", mc_metric, "reporting metric: incident|transmitters");
    mc->add_flag("--paper-faithful", mc_paper,
                 "full sampling for every network size");

    // render
    auto* ren = app.add_subcommand("render", "scatter figure from a records CSV");
    std::string ren_records;
    int ren_n = 0;
    std::string ren_out = "scatter.svg";
    int ren_width = 640;
    ren->add_option("records", ren_records, "records CSV file")->required();
    ren->add_option("-n,--nodes", ren_n, "network size to plot")->required();
    ren->add_option("-o,--out", ren_out, "output SVG file");
    ren->add_option("--width", ren_width, "figure width in pixels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? cli::kExitOk : cli::kExitUsage;
    }

    try {
        if (gen->parsed()) {
            const geometry::BoundingBox box(
                geometry::Point2(gen_bbox[0], gen_bbox[1]),
                geometry::Point2(gen_bbox[2], gen_bbox[3]));
            return cli::cmd_generate(gen_n, box, gen_seed, gen_out);
        }
        if (sim->parsed()) {
            std::optional<std::string> svg;
            if (!sim_svg.empty()) svg = sim_svg;
            return cli::cmd_simulate(sim_scenario, sim_out, svg, sim_width);
        }
        if (mc->parsed()) {
            std::optional<std::string> metric;
            if (!mc_metric.empty()) metric = mc_metric;
            return cli::cmd_montecarlo(mc_config, mc_records, mc_summary, metric,
                                       mc_paper);
        }
        if (ren->parsed()) {
            return cli::cmd_render(ren_records, ren_n, ren_out, ren_width);
        }
    } catch (const InvalidArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::kExitRuntime;
    }
    return cli::kExitUsage;
}
