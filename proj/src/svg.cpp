#include <semiconvex/svg.hpp>

#include <cmath>
#include <cstdio>

namespace semiconvex {

namespace {

std::string num(double v) {
    if (v == 0.0) v = 0.0;  // normalize -0
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Style {
    double stroke;  // stroke width in user units
    double dash;    // dash period for open boundaries
    double dot;     // marker radius for degenerate included arcs
};

void cell_rects(std::string& out, const BBox& box, double res, int nx, int ny,
                const std::vector<char>& on, const char* fill, const char* opacity) {
    for (int iy = 0; iy < ny; ++iy)
        for (int ix = 0; ix < nx; ++ix) {
            if (!on[static_cast<size_t>(iy) * nx + ix]) continue;
            out += "  <rect x=\"" + num(box.lo.x() + ix * res) + "\" y=\"" +
                   num(box.lo.y() + iy * res) + "\" width=\"" + num(res) + "\" height=\"" +
                   num(res) + "\" fill=\"" + fill + "\" fill-opacity=\"" + opacity +
                   "\" stroke=\"none\"/>\n";
        }
}

void disk_element(std::string& out, const Obstacle& o, const Style& st) {
    const Disk& d = std::get<Disk>(o.shape);
    std::string base = "  <circle cx=\"" + num(d.center.x()) + "\" cy=\"" +
                       num(d.center.y()) + "\" r=\"" + num(d.radius) + "\"";
    if (o.mode != BoundaryMode::Partial) {
        out += base + " fill=\"#9ecae1\" fill-opacity=\"0.35\" stroke=\"#1f4e79\" stroke-width=\"" +
               num(st.stroke) + "\"" +
               (o.mode == BoundaryMode::Open
                    ? " stroke-dasharray=\"" + num(st.dash) + " " + num(st.dash) + "\""
                    : "") +
               "/>\n";
        return;
    }
    out += base + " fill=\"#9ecae1\" fill-opacity=\"0.35\" stroke=\"none\"/>\n";
    for (const Arc& a : canonicalize(o.included)) {
        Vec2 p0 = d.center + d.radius * unit_vector(a.start);
        if (a.width <= 0.0) {
            out += "  <circle cx=\"" + num(p0.x()) + "\" cy=\"" + num(p0.y()) + "\" r=\"" +
                   num(st.dot) + "\" fill=\"#1f4e79\" stroke=\"none\"/>\n";
            continue;
        }
        if (a.width >= kTwoPi) {
            out += base + " fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"" +
                   num(st.stroke) + "\"/>\n";
            continue;
        }
        Vec2 p1 = d.center + d.radius * unit_vector(a.end());
        out += "  <path d=\"M " + num(p0.x()) + " " + num(p0.y()) + " A " + num(d.radius) +
               " " + num(d.radius) + " 0 " + (a.width > kPi ? "1" : "0") + " 1 " +
               num(p1.x()) + " " + num(p1.y()) + "\" fill=\"none\" stroke=\"#1f4e79\"" +
               " stroke-width=\"" + num(st.stroke) + "\"/>\n";
    }
}

void polygon_element(std::string& out, const Obstacle& o, const Style& st) {
    out += "  <polygon points=\"";
    bool first = true;
    for (const Vec2& v : std::get<ConvexPolygon>(o.shape).vertices) {
        if (!first) out += " ";
        out += num(v.x()) + "," + num(v.y());
        first = false;
    }
    out += "\" fill=\"#9ecae1\" fill-opacity=\"0.35\" stroke=\"#1f4e79\" stroke-width=\"" +
           num(st.stroke) + "\"" +
           (o.mode == BoundaryMode::Open
                ? " stroke-dasharray=\"" + num(st.dash) + " " + num(st.dash) + "\""
                : "") +
           "/>\n";
}

void capsule_element(std::string& out, const Obstacle& o, const Style& st) {
    const Capsule& c = std::get<Capsule>(o.shape);
    Vec2 u = (c.b - c.a).normalized();
    Vec2 n{-u.y(), u.x()};
    Vec2 p1 = c.a + c.radius * n, p2 = c.b + c.radius * n;
    Vec2 p3 = c.b - c.radius * n, p4 = c.a - c.radius * n;
    std::string r = num(c.radius);
    out += "  <path d=\"M " + num(p1.x()) + " " + num(p1.y()) + " L " + num(p2.x()) + " " +
           num(p2.y()) + " A " + r + " " + r + " 0 0 0 " + num(p3.x()) + " " + num(p3.y()) +
           " L " + num(p4.x()) + " " + num(p4.y()) + " A " + r + " " + r + " 0 0 0 " +
           num(p1.x()) + " " + num(p1.y()) +
           " Z\" fill=\"#9ecae1\" fill-opacity=\"0.35\" stroke=\"#1f4e79\" stroke-width=\"" +
           num(st.stroke) + "\"" +
           (o.mode == BoundaryMode::Open
                ? " stroke-dasharray=\"" + num(st.dash) + " " + num(st.dash) + "\""
                : "") +
           "/>\n";
}

void arrow(std::string& out, const Vec2& from, const Vec2& to, const char* color,
           const char* marker, const Style& st, bool dashed) {
    out += "  <line x1=\"" + num(from.x()) + "\" y1=\"" + num(from.y()) + "\" x2=\"" +
           num(to.x()) + "\" y2=\"" + num(to.y()) + "\" stroke=\"" + color +
           "\" stroke-width=\"" + num(st.stroke) + "\"" +
           (dashed ? " stroke-dasharray=\"" + num(st.dash / 2) + " " + num(st.dash / 2) + "\""
                   : "") +
           " marker-end=\"url(#" + marker + ")\"/>\n";
}

}  // namespace

std::string render_svg(const Scene& s, const SvgOverlays& overlays) {
    BBox box = s.bbox();
    if (overlays.shadow) box = overlays.shadow->box;
    if (overlays.hull) box = overlays.hull->box;
    const double w = box.width(), h = box.height();
    const double span = std::max(w, h);
    const Style st{span / 400.0, span / 60.0, span / 150.0};

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" +
           num(std::round(800.0 * h / w)) + "\" viewBox=\"" + num(box.lo.x()) + " " +
           num(-box.hi.y()) + " " + num(w) + " " + num(h) + "\">\n";
    out += "<defs>"
           "<marker id=\"tipr\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#b30000\"/></marker>"
           "<marker id=\"tipg\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" "
           "markerWidth=\"7\" markerHeight=\"7\" orient=\"auto-start-reverse\">"
           "<path d=\"M 0 0 L 10 5 L 0 10 z\" fill=\"#006600\"/></marker>"
           "</defs>\n";
    out += "<g transform=\"scale(1,-1)\">\n";
    out += "  <rect x=\"" + num(box.lo.x()) + "\" y=\"" + num(box.lo.y()) + "\" width=\"" +
           num(w) + "\" height=\"" + num(h) + "\" fill=\"#ffffff\"/>\n";
    out += "  <line x1=\"" + num(box.lo.x()) + "\" y1=\"0\" x2=\"" + num(box.hi.x()) +
           "\" y2=\"0\" stroke=\"#cccccc\" stroke-width=\"" + num(st.stroke) + "\"/>\n";
    out += "  <line x1=\"0\" y1=\"" + num(box.lo.y()) + "\" x2=\"0\" y2=\"" +
           num(box.hi.y()) + "\" stroke=\"#cccccc\" stroke-width=\"" + num(st.stroke) +
           "\"/>\n";

    if (overlays.shadow) {
        const ShadowRaster& r = *overlays.shadow;
        std::vector<char> on(r.cells.size());
        for (size_t i = 0; i < r.cells.size(); ++i) on[i] = r.cells[i] == CellClass::shadowed;
        cell_rects(out, r.box, r.resolution, r.nx, r.ny, on, "#d94545", "0.55");
    }
    if (overlays.hull) {
        const HullRaster& r = *overlays.hull;
        std::vector<char> on(r.cells.size());
        for (size_t i = 0; i < r.cells.size(); ++i) on[i] = r.cells[i] == HullCell::added;
        cell_rects(out, r.box, r.resolution, r.nx, r.ny, on, "#74c476", "0.5");
    }

    for (const Obstacle& o : s.obstacles) {
        if (o.is_disk())
            disk_element(out, o, st);
        else if (o.is_polygon())
            polygon_element(out, o, st);
        else
            capsule_element(out, o, st);
    }

    const double diag = std::hypot(w, h);
    for (const SupportRay& sr : overlays.rays) {
        arrow(out, sr.ray.origin, sr.touch_point, "#b30000", "tipr", st, false);
        if (sr.inner) {
            double t_far = sr.t_touch;
            for (const auto& hb : sr.hits_beyond) t_far = std::max(t_far, hb.second);
            arrow(out, sr.touch_point, sr.ray.at(t_far), "#b30000", "tipr", st, true);
        }
    }
    for (const Ray& ray : overlays.witnesses)
        arrow(out, ray.origin, ray.at(diag * 0.15), "#006600", "tipg", st, true);

    out += "</g>\n</svg>\n";
    return out;
}

}  // namespace semiconvex
