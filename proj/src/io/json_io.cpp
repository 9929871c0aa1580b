#include "boundnet/io/json_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace boundnet::io {

namespace {

using nlohmann::json;

std::string fmtg(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json parse_json(const std::string& text, const std::string& what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw SchemaError(what, "not valid JSON");
    }
    return j;
}

const json& need(const json& j, const char* key, const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) {
        throw SchemaError(path + "." + key, "missing required field");
    }
    return *it;
}

double need_number(const json& j, const std::string& path) {
    if (!j.is_number()) throw SchemaError(path, "expected a number");
    return j.get<double>();
}

double number_or(const json& j, const char* key, double fallback,
                 const std::string& path) {
    if (!j.is_object()) throw SchemaError(path, "expected an object");
    const auto it = j.find(key);
    if (it == j.end()) return fallback;
    return need_number(*it, path + "." + key);
}

int need_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) throw SchemaError(path, "expected an integer");
    return j.get<int>();
}

BoundingBox bbox_from(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 4) {
        throw SchemaError(path, "expected [minx,miny,maxx,maxy]");
    }
    try {
        return BoundingBox(
            geometry::Point2(need_number(j[0], path + "[0]"),
                             need_number(j[1], path + "[1]")),
            geometry::Point2(need_number(j[2], path + "[2]"),
                             need_number(j[3], path + "[3]")));
    } catch (const InvalidArgument& e) {
        throw SchemaError(path, e.what());
    }
}

geometry::Point2 point_from(const json& j, const std::string& path) {
    if (!j.is_array() || j.size() != 2) {
        throw SchemaError(path, "expected [x,y]");
    }
    try {
        return geometry::Point2(need_number(j[0], path + "[0]"),
                                need_number(j[1], path + "[1]"));
    } catch (const InvalidArgument& e) {
        throw SchemaError(path, e.what());
    }
}

SensorLayout layout_from(const json& j, const std::string& path) {
    const BoundingBox box = bbox_from(need(j, "bbox", path), path + ".bbox");
    const json& pts = need(j, "points", path);
    if (!pts.is_array()) throw SchemaError(path + ".points", "expected an array");
    std::vector<geometry::Point2> points;
    points.reserve(pts.size());
    for (size_t i = 0; i < pts.size(); ++i) {
        points.push_back(point_from(pts[i], path + ".points[" + std::to_string(i) + "]"));
    }
    try {
        return SensorLayout(std::move(points), box);
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
}

json layout_to(const SensorLayout& layout) {
    json j;
    j["bbox"] = {layout.bbox().min.x, layout.bbox().min.y, layout.bbox().max.x,
                 layout.bbox().max.y};
    json pts = json::array();
    for (const auto& p : layout.points()) pts.push_back({p.x, p.y});
    j["points"] = std::move(pts);
    return j;
}

field::PhenomenonField field_from(const json& j, const std::string& path) {
    const json& tj = need(j, "type", path);
    if (!tj.is_string()) throw SchemaError(path + ".type", "expected a string");
    const std::string type = tj.get<std::string>();
    try {
        if (type == "halfplane") {
            field::HalfPlane hp;
            hp.normal = point_from(need(j, "normal", path), path + ".normal");
            hp.offset = need_number(need(j, "offset", path), path + ".offset");
            hp.inside = need_number(need(j, "inside", path), path + ".inside");
            hp.outside = need_number(need(j, "outside", path), path + ".outside");
            return field::PhenomenonField(hp);
        }
        if (type == "disk") {
            field::Disk d;
            d.center = point_from(need(j, "center", path), path + ".center");
            d.radius = need_number(need(j, "radius", path), path + ".radius");
            d.inside = need_number(need(j, "inside", path), path + ".inside");
            d.outside = need_number(need(j, "outside", path), path + ".outside");
            return field::PhenomenonField(d);
        }
        if (type == "scaledgray") {
            field::ScaledGray sg;
            sg.brightness =
                need_number(need(j, "brightness", path), path + ".brightness");
            sg.base = std::make_shared<field::PhenomenonField>(
                field_from(need(j, "base", path), path + ".base"));
            return field::PhenomenonField(sg);
        }
        if (type == "activation") {
            const json& act = need(j, "active", path);
            if (!act.is_array()) throw SchemaError(path + ".active", "expected an array");
            field::BinaryActivation ba;
            for (size_t i = 0; i < act.size(); ++i) {
                ba.active.push_back(
                    need_int(act[i], path + ".active[" + std::to_string(i) + "]"));
            }
            return field::PhenomenonField(ba);
        }
    } catch (const SchemaError&) {
        throw;
    } catch (const Error& e) {
        throw SchemaError(path, e.what());
    }
    throw SchemaError(path + ".type", "unknown field type '" + type + "'");
}

json field_to(const field::PhenomenonField& f) {
    json j;
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, field::HalfPlane>) {
                j["type"] = "halfplane";
                j["normal"] = {v.normal.x, v.normal.y};
                j["offset"] = v.offset;
                j["inside"] = v.inside;
                j["outside"] = v.outside;
            } else if constexpr (std::is_same_v<T, field::Disk>) {
                j["type"] = "disk";
                j["center"] = {v.center.x, v.center.y};
                j["radius"] = v.radius;
                j["inside"] = v.inside;
                j["outside"] = v.outside;
            } else if constexpr (std::is_same_v<T, field::ScaledGray>) {
                j["type"] = "scaledgray";
                j["brightness"] = v.brightness;
                j["base"] = json::parse(field_to_json(*v.base));
            } else {
                j["type"] = "activation";
                j["active"] = v.active;
            }
        },
        f.variant());
    return j;
}

} // namespace

std::string layout_to_json(const SensorLayout& layout) {
    return layout_to(layout).dump(2) + "\n";
}

SensorLayout layout_from_json(const std::string& text) {
    return layout_from(parse_json(text, "layout"), "layout");
}

std::string geometry_to_json(const Triangulation& tri, const VoronoiDiagram& vor) {
    json j;
    json tris = json::array();
    for (const auto& t : tri.triangles()) tris.push_back({t[0], t[1], t[2]});
    j["triangles"] = std::move(tris);
    json segs = json::object();
    for (const auto& [edge, seg] : vor.segments()) {
        const std::string key =
            std::to_string(edge.first) + "-" + std::to_string(edge.second);
        segs[key] = {{seg.a.x, seg.a.y}, {seg.b.x, seg.b.y}};
    }
    j["segments"] = std::move(segs);
    return j.dump(2) + "\n";
}

field::PhenomenonField field_from_json(const std::string& text) {
    return field_from(parse_json(text, "field"), "field");
}

std::string field_to_json(const field::PhenomenonField& f) {
    return field_to(f).dump();
}

Scenario scenario_from_json(const std::string& text, const std::string& base_dir) {
    const json j = parse_json(text, "scenario");
    if (!j.is_object()) throw SchemaError("scenario", "expected an object");
    Scenario sc;

    const bool has_inline = j.contains("layout");
    const bool has_file = j.contains("layout_file");
    if (has_inline == has_file) {
        throw SchemaError("scenario.layout",
                          "exactly one of 'layout' or 'layout_file' required");
    }
    if (has_inline) {
        sc.layout = std::make_shared<SensorLayout>(
            layout_from(j["layout"], "scenario.layout"));
    } else {
        const json& lf = j["layout_file"];
        if (!lf.is_string()) {
            throw SchemaError("scenario.layout_file", "expected a string path");
        }
        std::filesystem::path p = lf.get<std::string>();
        if (p.is_relative() && !base_dir.empty()) {
            p = std::filesystem::path(base_dir) / p;
        }
        sc.layout = std::make_shared<SensorLayout>(layout_from_json(read_file(p.string())));
    }

    sc.field = std::make_shared<field::PhenomenonField>(
        field_from(need(j, "field", "scenario"), "scenario.field"));

    sc.theta = need_number(need(j, "theta", "scenario"), "scenario.theta");
    if (!(sc.theta >= 0.0 && sc.theta <= 1.0)) {
        throw SchemaError("scenario.theta", "must lie in [0,1]");
    }

    const json& cj = need(j, "cost", "scenario");
    try {
        sc.cost = protocol::CostModel(
            need_number(need(cj, "beta", "scenario.cost"), "scenario.cost.beta"),
            number_or(cj, "epsilon_unit", 0.0, "scenario.cost"));
    } catch (const InvalidArgument& e) {
        throw SchemaError("scenario.cost", e.what());
    }

    sc.sense_threshold = number_or(j, "sense_threshold", 0.5, "scenario");
    if (!(sc.sense_threshold >= 0.0 && sc.sense_threshold <= 1.0)) {
        throw SchemaError("scenario.sense_threshold", "must lie in [0,1]");
    }
    if (j.contains("seed")) {
        sc.seed = j["seed"].get<std::uint64_t>();
    }
    return sc;
}

std::string result_to_json(const protocol::BoundaryResult& result, int n,
                           const protocol::CostModel& cost, int naive_sensing_m) {
    json j;
    json segs = json::array();
    for (const auto& s : result.segments) {
        json e;
        e["pair"] = {s.pair.first, s.pair.second};
        e["geom"] = {{s.geom.a.x, s.geom.a.y}, {s.geom.b.x, s.geom.b.y}};
        e["tx"] = s.transmitter;
        segs.push_back(std::move(e));
    }
    j["segments"] = std::move(segs);
    j["local_messages"] = result.local_messages;
    j["remote_messages"] = result.remote_messages;
    j["costs"] = {
        {"naive_full", protocol::cost_naive_full(n, cost)},
        {"naive_sensing", static_cast<double>(naive_sensing_m) * cost.beta},
        {"proposed", protocol::cost_proposed(result, cost)},
    };
    return j.dump(2) + "\n";
}

montecarlo::SweepConfig sweep_config_from_json(const std::string& text) {
    const json j = parse_json(text, "config");
    if (!j.is_object()) throw SchemaError("config", "expected an object");
    montecarlo::SweepConfig cfg;

    const json& counts = need(j, "node_counts", "config");
    if (!counts.is_array() || counts.empty()) {
        throw SchemaError("config.node_counts", "expected a non-empty array");
    }
    for (size_t i = 0; i < counts.size(); ++i) {
        cfg.node_counts.push_back(
            need_int(counts[i], "config.node_counts[" + std::to_string(i) + "]"));
    }

    cfg.layouts_per_count = static_cast<int>(
        number_or(j, "layouts_per_count", cfg.layouts_per_count, "config"));
    cfg.patterns_per_activation = static_cast<int>(number_or(
        j, "patterns_per_activation_size", cfg.patterns_per_activation, "config"));
    cfg.reduced_layouts = static_cast<int>(
        number_or(j, "reduced_layouts", cfg.reduced_layouts, "config"));
    cfg.reduced_patterns = static_cast<int>(
        number_or(j, "reduced_patterns", cfg.reduced_patterns, "config"));
    cfg.reduced_above = static_cast<int>(
        number_or(j, "reduced_above", cfg.reduced_above, "config"));
    if (j.contains("paper_faithful")) {
        const json& pf = j["paper_faithful"];
        if (!pf.is_boolean()) {
            throw SchemaError("config.paper_faithful", "expected a boolean");
        }
        cfg.paper_faithful = pf.get<bool>();
    }
    cfg.theta = number_or(j, "theta", cfg.theta, "config");
    if (j.contains("seed")) {
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("bbox")) {
        cfg.bbox = bbox_from(j["bbox"], "config.bbox");
    }
    if (j.contains("reporting_metric")) {
        const json& mj = j["reporting_metric"];
        if (!mj.is_string()) {
            throw SchemaError("config.reporting_metric", "expected a string");
        }
        const std::string m = mj.get<std::string>();
        if (m == "incident") {
            cfg.metric = montecarlo::ReportingMetric::IncidentNodes;
        } else if (m == "transmitters") {
            cfg.metric = montecarlo::ReportingMetric::Transmitters;
        } else {
            throw SchemaError("config.reporting_metric",
                              "expected 'incident' or 'transmitters'");
        }
    }
    try {
        cfg.validate();
    } catch (const InvalidArgument& e) {
        throw SchemaError("config", e.what());
    }
    return cfg;
}

std::string record_csv_header() {
    return "n,layout,activation_size,pattern,observing_frac,reporting_frac,"
           "naive_sensing_frac\n";
}

std::string record_to_csv(const montecarlo::TrialRecord& r) {
    std::ostringstream os;
    os << r.n << ',' << r.layout_index << ',' << r.activation_size << ','
       << r.pattern_index << ',' << fmtg(r.observing_fraction) << ','
       << fmtg(r.reporting_fraction) << ',' << fmtg(r.naive_sensing_fraction)
       << '\n';
    return os.str();
}

std::string summary_to_csv(const montecarlo::SweepSummary& s) {
    std::ostringstream os;
    os << "n,max_reporting_pct,mean_reporting_pct\n";
    for (const auto& row : s.rows) {
        os << row.n << ',' << fmtg(row.max_reporting * 100.0) << ','
           << fmtg(row.mean_reporting * 100.0) << '\n';
    }
    return os.str();
}

std::vector<montecarlo::TrialRecord> records_from_csv(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    if (!std::getline(is, line) || line + "\n" != record_csv_header()) {
        throw SchemaError("records.csv", "unexpected header");
    }
    std::vector<montecarlo::TrialRecord> out;
    int lineno = 1;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (cells.size() != 7) {
            throw SchemaError("records.csv:" + std::to_string(lineno),
                              "expected 7 columns");
        }
        try {
            montecarlo::TrialRecord r;
            r.n = std::stoi(cells[0]);
            r.layout_index = std::stoi(cells[1]);
            r.activation_size = std::stoi(cells[2]);
            r.pattern_index = std::stoi(cells[3]);
            r.observing_fraction = std::stod(cells[4]);
            r.reporting_fraction = std::stod(cells[5]);
            r.naive_sensing_fraction = std::stod(cells[6]);
            out.push_back(r);
        } catch (const std::exception&) {
            throw SchemaError("records.csv:" + std::to_string(lineno),
                              "malformed value");
        }
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError("cannot open " + tmp + " for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            std::filesystem::remove(tmp);
            throw IoError("failed writing " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError("failed to move " + tmp + " into place: " + ec.message());
    }
}

} // namespace boundnet::io
