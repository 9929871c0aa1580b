#include "boundnet/render/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

#include "boundnet/errors.hpp"

namespace boundnet::render {

namespace {

std::string fmt6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

int gray_level(double psi) {
    const double lum = 235.0 - 155.0 * psi;
    return static_cast<int>(std::lround(std::clamp(lum, 0.0, 255.0)));
}

std::string gray_fill(double psi) {
    const int l = gray_level(psi);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "rgb(%d,%d,%d)", l, l, l);
    return buf;
}

struct Transform {
    BoundingBox box;
    double w_px, h_px;

    double x(double vx) const { return (vx - box.min.x) / box.width() * w_px; }
    double y(double vy) const { return (box.max.y - vy) / box.height() * h_px; }
};

// clip p + t*d, t in (-inf, inf), to the box; false when disjoint
bool clip_line(const BoundingBox& box, const Point2& p, double dx, double dy,
               Point2& a, Point2& b) {
    double t0 = -1e300, t1 = 1e300;
    const double lo[2] = {box.min.x, box.min.y};
    const double hi[2] = {box.max.x, box.max.y};
    const double pv[2] = {p.x, p.y};
    const double dv[2] = {dx, dy};
    for (int axis = 0; axis < 2; ++axis) {
        if (dv[axis] == 0.0) {
            if (pv[axis] < lo[axis] || pv[axis] > hi[axis]) return false;
            continue;
        }
        double ta = (lo[axis] - pv[axis]) / dv[axis];
        double tb = (hi[axis] - pv[axis]) / dv[axis];
        if (ta > tb) std::swap(ta, tb);
        t0 = std::max(t0, ta);
        t1 = std::min(t1, tb);
        if (t0 > t1) return false;
    }
    a = Point2(std::clamp(p.x + t0 * dx, box.min.x, box.max.x),
               std::clamp(p.y + t0 * dy, box.min.y, box.max.y));
    b = Point2(std::clamp(p.x + t1 * dx, box.min.x, box.max.x),
               std::clamp(p.y + t1 * dy, box.min.y, box.max.y));
    return true;
}

// bbox corners clipped to the halfplane normal.p >= offset
std::vector<Point2> clip_halfplane_region(const BoundingBox& box,
                                          const Point2& normal, double offset) {
    std::vector<Point2> poly = {
        Point2(box.min.x, box.min.y), Point2(box.max.x, box.min.y),
        Point2(box.max.x, box.max.y), Point2(box.min.x, box.max.y)};
    auto f = [&](const Point2& p) {
        return normal.x * p.x + normal.y * p.y - offset;
    };
    std::vector<Point2> out;
    const size_t m = poly.size();
    for (size_t k = 0; k < m; ++k) {
        const Point2& p = poly[k];
        const Point2& q = poly[(k + 1) % m];
        const double fp = f(p);
        const double fq = f(q);
        if (fp >= 0.0) out.push_back(p);
        if ((fp < 0.0 && fq > 0.0) || (fp > 0.0 && fq < 0.0)) {
            const double t = fp / (fp - fq);
            out.emplace_back(p.x + t * (q.x - p.x), p.y + t * (q.y - p.y));
        }
    }
    return out;
}

void emit_segments(std::ostringstream& os, const Transform& tr,
                   const std::vector<Segment>& segments, const char* style) {
    for (const Segment& s : segments) {
        os << "<line x1=\"" << fmt6(tr.x(s.a.x)) << "\" y1=\"" << fmt6(tr.y(s.a.y))
           << "\" x2=\"" << fmt6(tr.x(s.b.x)) << "\" y2=\"" << fmt6(tr.y(s.b.y))
           << "\" " << style << "/>\n";
    }
}

void emit_polygon(std::ostringstream& os, const Transform& tr,
                  const std::vector<Point2>& poly, const std::string& fill) {
    if (poly.empty()) return;
    os << "<polygon points=\"";
    for (size_t i = 0; i < poly.size(); ++i) {
        if (i) os << ' ';
        os << fmt6(tr.x(poly[i].x)) << ',' << fmt6(tr.y(poly[i].y));
    }
    os << "\" fill=\"" << fill << "\" stroke=\"none\"/>\n";
}

struct LayerEmitter {
    std::ostringstream& os;
    const Transform& tr;

    void operator()(const Sites& l) const {
        for (const Point2& p : l.points) {
            os << "<circle cx=\"" << fmt6(tr.x(p.x)) << "\" cy=\"" << fmt6(tr.y(p.y))
               << "\" r=\"2.500000\" fill=\"#202020\"/>\n";
        }
    }
    void operator()(const DelaunayEdges& l) const {
        emit_segments(os, tr, l.segments,
                      "stroke=\"#707070\" stroke-width=\"1\"");
    }
    void operator()(const VoronoiSegments& l) const {
        emit_segments(os, tr, l.segments,
                      "stroke=\"#b0b0b0\" stroke-width=\"1\"");
    }
    void operator()(const FieldShading& l) const {
        os << "<rect x=\"0.000000\" y=\"0.000000\" width=\"" << fmt6(tr.w_px)
           << "\" height=\"" << fmt6(tr.h_px) << "\" fill=\""
           << gray_fill(l.outside_level) << "\"/>\n";
        if (const auto* hp = std::get_if<FieldShading::HalfPlaneArea>(&l.area)) {
            emit_polygon(os, tr, clip_halfplane_region(tr.box, hp->normal, hp->offset),
                         gray_fill(l.inside_level));
        } else {
            const auto& disk = std::get<FieldShading::DiskArea>(l.area);
            os << "<circle cx=\"" << fmt6(tr.x(disk.center.x)) << "\" cy=\""
               << fmt6(tr.y(disk.center.y)) << "\" r=\""
               << fmt6(disk.radius / tr.box.width() * tr.w_px) << "\" fill=\""
               << gray_fill(l.inside_level) << "\"/>\n";
        }
    }
    void operator()(const TrueBoundary& l) const {
        if (const auto* line = std::get_if<TrueBoundary::Line>(&l.shape)) {
            // the boundary line normal.p = offset, direction (-ny, nx)
            const Point2 anchor(line->normal.x * line->offset,
                                line->normal.y * line->offset);
            Point2 a, b;
            if (clip_line(tr.box, anchor, -line->normal.y, line->normal.x, a, b)) {
                emit_segments(os, tr, {Segment{a, b}},
                              "stroke=\"#000000\" stroke-width=\"2\"");
            }
        } else {
            const auto& c = std::get<TrueBoundary::Circle>(l.shape);
            os << "<circle cx=\"" << fmt6(tr.x(c.center.x)) << "\" cy=\""
               << fmt6(tr.y(c.center.y)) << "\" r=\""
               << fmt6(c.radius / tr.box.width() * tr.w_px)
               << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"2\"/>\n";
        }
    }
    void operator()(const ApproxBoundary& l) const {
        emit_segments(os, tr, l.segments,
                      "stroke=\"#000000\" stroke-width=\"2\" "
                      "stroke-dasharray=\"6,4\"");
    }
};

} // namespace

std::string scene_to_svg(const Scene& scene, int width_px) {
    if (width_px <= 0) {
        throw InvalidArgument("scene_to_svg: width must be positive");
    }
    const double aspect = scene.bbox.height() / scene.bbox.width();
    const int height_px =
        std::max(1, static_cast<int>(std::lround(width_px * aspect)));
    const Transform tr{scene.bbox, static_cast<double>(width_px),
                       static_cast<double>(height_px)};

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << width_px << "\" height=\"" << height_px << "\" viewBox=\"0 0 "
       << width_px << ' ' << height_px << "\">\n";
    os << "<defs><clipPath id=\"box\"><rect x=\"0\" y=\"0\" width=\"" << width_px
       << "\" height=\"" << height_px << "\"/></clipPath></defs>\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << width_px << "\" height=\""
       << height_px << "\" fill=\"#ffffff\"/>\n";
    os << "<g clip-path=\"url(#box)\">\n";
    for (const Layer& layer : scene.layers) {
        std::visit(LayerEmitter{os, tr}, layer);
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

std::string scatter_to_svg(const std::vector<montecarlo::TrialRecord>& records,
                           int n_filter, int width_px) {
    if (width_px <= 0) {
        throw InvalidArgument("scatter_to_svg: width must be positive");
    }
    // overlapping markers collapse; the cloud is a set of distinct positions
    std::set<std::pair<double, double>> pts;
    for (const auto& r : records) {
        if (r.n == n_filter) {
            pts.insert({r.observing_fraction * 100.0, r.reporting_fraction * 100.0});
        }
    }
    if (pts.empty()) {
        throw EmptyAfterFilter("scatter_to_svg: no records for n=" +
                               std::to_string(n_filter));
    }

    const double ml = 50.0, mr = 15.0, mt = 15.0, mb = 45.0;
    const double plot = width_px - ml - mr;
    const int height_px = static_cast<int>(std::lround(plot + mt + mb));
    auto px = [&](double v) { return ml + v / 100.0 * plot; };
    auto py = [&](double v) { return mt + (100.0 - v) / 100.0 * plot; };

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
       << width_px << "\" height=\"" << height_px << "\" viewBox=\"0 0 "
       << width_px << ' ' << height_px << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << width_px << "\" height=\""
       << height_px << "\" fill=\"#ffffff\"/>\n";

    for (int tick = 0; tick <= 100; tick += 25) {
        os << "<line x1=\"" << fmt6(px(tick)) << "\" y1=\"" << fmt6(py(0))
           << "\" x2=\"" << fmt6(px(tick)) << "\" y2=\"" << fmt6(py(0) + 5)
           << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << fmt6(px(tick)) << "\" y=\"" << fmt6(py(0) + 20)
           << "\" font-family=\"sans-serif\" font-size=\"11\" "
              "text-anchor=\"middle\">"
           << tick << "</text>\n";
        os << "<line x1=\"" << fmt6(px(0) - 5) << "\" y1=\"" << fmt6(py(tick))
           << "\" x2=\"" << fmt6(px(0)) << "\" y2=\"" << fmt6(py(tick))
           << "\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << fmt6(px(0) - 8) << "\" y=\"" << fmt6(py(tick) + 4)
           << "\" font-family=\"sans-serif\" font-size=\"11\" "
              "text-anchor=\"end\">"
           << tick << "</text>\n";
    }
    os << "<text x=\"" << fmt6(px(50)) << "\" y=\"" << fmt6(py(0) + 38)
       << "\" font-family=\"sans-serif\" font-size=\"12\" "
          "text-anchor=\"middle\">observing (%)</text>\n";
    os << "<text x=\"12\" y=\"" << fmt6(py(50))
       << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" "
          "transform=\"rotate(-90 12 "
       << fmt6(py(50)) << ")\">reporting (%)</text>\n";

    // markers under the reference lines
    for (const auto& [ox, ry] : pts) {
        os << "<circle cx=\"" << fmt6(px(ox)) << "\" cy=\"" << fmt6(py(ry))
           << "\" r=\"2.000000\" fill=\"#9a9a9a\"/>\n";
    }
    // first naive: everyone reports
    os << "<line x1=\"" << fmt6(px(0)) << "\" y1=\"" << fmt6(py(100)) << "\" x2=\""
       << fmt6(px(100)) << "\" y2=\"" << fmt6(py(100))
       << "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    // second naive: the observers report
    os << "<line x1=\"" << fmt6(px(0)) << "\" y1=\"" << fmt6(py(0)) << "\" x2=\""
       << fmt6(px(100)) << "\" y2=\"" << fmt6(py(100))
       << "\" stroke=\"#000000\" stroke-width=\"1.5\"/>\n";
    // plot frame
    os << "<rect x=\"" << fmt6(px(0)) << "\" y=\"" << fmt6(py(100)) << "\" width=\""
       << fmt6(plot) << "\" height=\"" << fmt6(plot)
       << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1\"/>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace boundnet::render
