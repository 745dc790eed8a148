#include <semiconvex/scene_io.hpp>

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <set>

namespace semiconvex {

namespace {

using nlohmann::ordered_json;

constexpr double kDegPerRad = 180.0 / kPi;

std::string at_obstacle(size_t i, const std::string& what) {
    return "obstacle " + std::to_string(i) + ": " + what;
}

void reject_unknown_keys(const ordered_json& j, const std::set<std::string>& allowed,
                         const std::string& where) {
    for (const auto& item : j.items())
        if (!allowed.count(item.key()))
            throw SceneParseError(where + ": unknown key \"" + item.key() + "\"");
}

double require_number(const ordered_json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw SceneParseError(where + ": missing \"" + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number()) throw SceneParseError(where + ": \"" + key + "\" must be a number");
    return v.get<double>();
}

Vec2 require_vec2(const ordered_json& j, const std::string& key, const std::string& where) {
    if (!j.contains(key)) throw SceneParseError(where + ": missing \"" + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw SceneParseError(where + ": \"" + key + "\" must be [x, y]");
    return Vec2{v[0].get<double>(), v[1].get<double>()};
}

BoundaryMode require_mode(const ordered_json& j, const std::string& where) {
    if (!j.contains("boundary")) throw SceneParseError(where + ": missing \"boundary\"");
    const auto& v = j.at("boundary");
    if (v.is_string()) {
        std::string m = v.get<std::string>();
        if (m == "open") return BoundaryMode::Open;
        if (m == "closed") return BoundaryMode::Closed;
        if (m == "partial") return BoundaryMode::Partial;
    }
    throw SceneParseError(where + ": \"boundary\" must be \"open\", \"closed\" or \"partial\"");
}

ArcSet parse_included_arcs(const ordered_json& j, const std::string& where) {
    const auto& v = j.at("included_arcs");
    if (!v.is_array()) throw SceneParseError(where + ": \"included_arcs\" must be an array");
    ArcSet arcs;
    for (size_t a = 0; a < v.size(); ++a) {
        const auto& e = v[a];
        std::string at = where + ", included_arcs[" + std::to_string(a) + "]";
        if (!e.is_array() || e.size() != 3 || !e[0].is_number() || !e[1].is_number() ||
            !e[2].is_string())
            throw SceneParseError(at + ": expected [start_deg, end_deg, flags]");
        std::string flags = e[2].get<std::string>();
        if (flags.size() != 2 || (flags[0] != 'c' && flags[0] != 'o') ||
            (flags[1] != 'c' && flags[1] != 'o'))
            throw SceneParseError(at + ": flags must be \"cc\", \"oo\", \"co\" or \"oc\"");
        double s_deg = e[0].get<double>(), e_deg = e[1].get<double>();
        if (e_deg - s_deg < 0.0 || e_deg - s_deg > 360.0)
            throw SceneParseError(at + ": arc must run forward and span at most 360 degrees");
        arcs.push_back(make_arc(s_deg / kDegPerRad, e_deg / kDegPerRad, flags[0] == 'c',
                                flags[1] == 'c'));
    }
    return canonicalize(arcs);
}

Obstacle parse_obstacle(const ordered_json& j, size_t index) {
    std::string where = "obstacle " + std::to_string(index);
    if (!j.is_object()) throw SceneParseError(where + ": must be an object");
    if (!j.contains("kind") || !j.at("kind").is_string())
        throw SceneParseError(where + ": missing \"kind\"");
    std::string kind = j.at("kind").get<std::string>();

    Obstacle o;
    o.id = static_cast<int>(index);
    o.mode = require_mode(j, where);

    if (kind == "disk") {
        std::set<std::string> keys = {"kind", "center", "radius", "boundary"};
        if (o.mode == BoundaryMode::Partial) keys.insert("included_arcs");
        reject_unknown_keys(j, keys, where);
        o.shape = Disk{require_vec2(j, "center", where), require_number(j, "radius", where)};
        if (o.mode == BoundaryMode::Partial) {
            if (!j.contains("included_arcs"))
                throw SceneParseError(where + ": partial disk needs \"included_arcs\"");
            o.included = parse_included_arcs(j, where);
        }
    } else if (kind == "polygon") {
        reject_unknown_keys(j, {"kind", "vertices", "boundary"}, where);
        if (o.mode == BoundaryMode::Partial)
            throw SceneParseError(where + ": polygon boundary must be open or closed");
        if (!j.contains("vertices") || !j.at("vertices").is_array())
            throw SceneParseError(where + ": missing \"vertices\"");
        ConvexPolygon poly;
        const auto& vs = j.at("vertices");
        for (size_t v = 0; v < vs.size(); ++v) {
            if (!vs[v].is_array() || vs[v].size() != 2 || !vs[v][0].is_number() ||
                !vs[v][1].is_number())
                throw SceneParseError(where + ": vertex " + std::to_string(v) +
                                      " must be [x, y]");
            poly.vertices.push_back(Vec2{vs[v][0].get<double>(), vs[v][1].get<double>()});
        }
        o.shape = std::move(poly);
    } else if (kind == "capsule") {
        reject_unknown_keys(j, {"kind", "a", "b", "radius", "boundary"}, where);
        if (o.mode == BoundaryMode::Partial)
            throw SceneParseError(where + ": capsule boundary must be open or closed");
        o.shape = Capsule{require_vec2(j, "a", where), require_vec2(j, "b", where),
                          require_number(j, "radius", where)};
    } else {
        throw SceneParseError(where + ": unknown kind \"" + kind + "\"");
    }
    return o;
}

const char* mode_name(BoundaryMode m) {
    switch (m) {
        case BoundaryMode::Open: return "open";
        case BoundaryMode::Closed: return "closed";
        default: return "partial";
    }
}

ordered_json vec2_json(const Vec2& p) { return ordered_json::array({p.x(), p.y()}); }

Obstacle make_rect(int id, BoundaryMode mode, double x0, double x1, double y0, double y1) {
    Obstacle o;
    o.id = id;
    o.mode = mode;
    o.shape = ConvexPolygon{{{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}}};
    return o;
}

Obstacle make_disk(int id, BoundaryMode mode, Vec2 c, double r) {
    Obstacle o;
    o.id = id;
    o.mode = mode;
    o.shape = Disk{c, r};
    return o;
}

Obstacle make_capsule(int id, BoundaryMode mode, Vec2 a, Vec2 b, double r) {
    Obstacle o;
    o.id = id;
    o.mode = mode;
    o.shape = Capsule{a, b, r};
    return o;
}

bool parse_ring_name(const std::string& name, int& k, double& rho) {
    k = 0;
    rho = 0.9;
    int consumed = 0;
    if (std::sscanf(name.c_str(), "ring(%d)%n", &k, &consumed) == 1 &&
        consumed == static_cast<int>(name.size()))
        return true;
    if (std::sscanf(name.c_str(), "ring(%d,%lf)%n", &k, &rho, &consumed) == 2 &&
        consumed == static_cast<int>(name.size()))
        return true;
    return false;
}

}  // namespace

Scene parse_scene(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SceneParseError(std::string("syntax error: ") + e.what());
    }
    if (!j.is_object()) throw SceneParseError("top level must be an object");
    reject_unknown_keys(j, {"eps_angle", "eps_space", "obstacles"}, "scene");

    Scene s;
    if (j.contains("eps_angle")) s.eps_angle = require_number(j, "eps_angle", "scene");
    if (j.contains("eps_space")) s.eps_space = require_number(j, "eps_space", "scene");
    if (j.contains("obstacles")) {
        const auto& obs = j.at("obstacles");
        if (!obs.is_array()) throw SceneParseError("scene: \"obstacles\" must be an array");
        for (size_t i = 0; i < obs.size(); ++i) {
            Obstacle o = parse_obstacle(obs[i], i);
            try {
                validate_obstacle(o, s.eps_space);
            } catch (const std::invalid_argument& e) {
                throw SceneParseError(at_obstacle(i, e.what()));
            }
            s.obstacles.push_back(std::move(o));
        }
    }
    return s;
}

std::string serialize_scene(const Scene& s) {
    ordered_json j;
    j["eps_angle"] = s.eps_angle;
    j["eps_space"] = s.eps_space;
    j["obstacles"] = ordered_json::array();
    for (const Obstacle& o : s.obstacles) {
        ordered_json e;
        if (o.is_disk()) {
            const Disk& d = std::get<Disk>(o.shape);
            e["kind"] = "disk";
            e["center"] = vec2_json(d.center);
            e["radius"] = d.radius;
            e["boundary"] = mode_name(o.mode);
            if (o.mode == BoundaryMode::Partial) {
                ordered_json arcs = ordered_json::array();
                for (const Arc& a : canonicalize(o.included)) {
                    double s_deg = a.start * kDegPerRad;
                    std::string flags{a.start_closed ? 'c' : 'o', a.end_closed ? 'c' : 'o'};
                    arcs.push_back(
                        ordered_json::array({s_deg, s_deg + a.width * kDegPerRad, flags}));
                }
                e["included_arcs"] = std::move(arcs);
            }
        } else if (o.is_polygon()) {
            e["kind"] = "polygon";
            ordered_json vs = ordered_json::array();
            for (const Vec2& v : std::get<ConvexPolygon>(o.shape).vertices)
                vs.push_back(vec2_json(v));
            e["vertices"] = std::move(vs);
            e["boundary"] = mode_name(o.mode);
        } else {
            const Capsule& c = std::get<Capsule>(o.shape);
            e["kind"] = "capsule";
            e["a"] = vec2_json(c.a);
            e["b"] = vec2_json(c.b);
            e["radius"] = c.radius;
            e["boundary"] = mode_name(o.mode);
        }
        j["obstacles"].push_back(std::move(e));
    }
    return j.dump(2) + "\n";
}

Scene fixture(const std::string& name, BoundaryMode mode) {
    if (mode == BoundaryMode::Partial)
        throw std::invalid_argument("fixture \"" + name + "\" has no partial-boundary form");
    Scene s;
    if (name == "pinwheel_rects") {
        s.obstacles = {make_rect(0, mode, -0.9, 3.0, 1.0, 1.2),
                       make_rect(1, mode, -1.2, -1.0, -0.9, 3.0),
                       make_rect(2, mode, -3.0, 0.9, -1.2, -1.0),
                       make_rect(3, mode, 1.0, 1.2, -3.0, 0.9)};
    } else if (name == "pinwheel_capsules") {
        s.obstacles = {make_capsule(0, mode, {-0.8, 1.1}, {2.9, 1.1}, 0.1),
                       make_capsule(1, mode, {-1.1, -0.8}, {-1.1, 2.9}, 0.1),
                       make_capsule(2, mode, {0.8, -1.1}, {-2.9, -1.1}, 0.1),
                       make_capsule(3, mode, {1.1, 0.8}, {1.1, -2.9}, 0.1)};
    } else if (name == "compass_disks") {
        double r = std::sqrt(2.0);
        s.obstacles = {make_disk(0, mode, {2, 0}, r), make_disk(1, mode, {0, 2}, r),
                       make_disk(2, mode, {-2, 0}, r), make_disk(3, mode, {0, -2}, r)};
    } else if (name == "hook_pair") {
        s.obstacles = {make_rect(0, mode, -2.2, -2.0, -2.0, 2.0),
                       make_rect(1, mode, -2.2, 0.6, 1.8, 2.0),
                       make_rect(2, mode, -2.2, 0.6, -2.0, -1.8),
                       make_rect(3, mode, 2.0, 2.2, -1.5, 1.5),
                       make_rect(4, mode, -0.6, 2.2, 1.3, 1.5),
                       make_rect(5, mode, -0.6, 2.2, -1.5, -1.3)};
    } else {
        int k = 0;
        double rho = 0.9;
        if (!parse_ring_name(name, k, rho)) {
            std::string known;
            for (const std::string& n : fixture_names()) known += " " + n;
            throw std::invalid_argument("unknown fixture \"" + name + "\"; available:" + known);
        }
        if (k < 2 || k > 64) throw std::invalid_argument("ring fixture needs 2 <= k <= 64");
        if (!(rho > 0.0) || !(rho < 1.0))
            throw std::invalid_argument("ring fixture needs 0 < rho < 1");
        double r = rho * std::sin(kPi / k);
        for (int i = 0; i < k; ++i) {
            double phi = kTwoPi * i / k;
            s.obstacles.push_back(
                make_disk(i, mode, {std::cos(phi), std::sin(phi)}, r));
        }
    }
    validate_scene(s);
    return s;
}

Scene fixture(const std::string& name) {
    BoundaryMode mode = BoundaryMode::Closed;
    if (name == "pinwheel_rects" || name == "pinwheel_capsules") mode = BoundaryMode::Open;
    return fixture(name, mode);
}

std::vector<std::string> fixture_names() {
    return {"pinwheel_rects", "pinwheel_capsules", "compass_disks", "hook_pair", "ring(k)",
            "ring(k,rho)"};
}

}  // namespace semiconvex
