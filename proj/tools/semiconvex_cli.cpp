#include <CLI11.hpp>

#include <semiconvex/hull.hpp>
#include <semiconvex/scene_io.hpp>
#include <semiconvex/shadow_problem.hpp>
#include <semiconvex/svg.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

using namespace semiconvex;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitParse = 2;
constexpr int kExitVerdict = 3;

constexpr double kDegPerRad = 180.0 / kPi;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Scene argument: a JSON file path, or "fixture:<name>" for a built-in.
Scene load_scene(const std::string& ref) {
    if (ref.rfind("fixture:", 0) == 0) return fixture(ref.substr(8));
    std::ifstream in(ref);
    if (!in) throw SceneParseError("cannot open scene file \"" + ref + "\"");
    std::stringstream buf;
    buf << in.rdbuf();
    Scene s = parse_scene(buf.str());
    validate_scene(s);
    return s;
}

Vec2 parse_point(const std::string& text) {
    double x = 0, y = 0;
    int consumed = 0;
    if (std::sscanf(text.c_str(), "%lf,%lf%n", &x, &y, &consumed) != 2 ||
        consumed != static_cast<int>(text.size()))
        throw UsageError("--point expects \"x,y\"");
    return Vec2{x, y};
}

BoundaryMode parse_mode(const std::string& text) {
    if (text == "open") return BoundaryMode::Open;
    if (text == "closed") return BoundaryMode::Closed;
    if (text == "partial") return BoundaryMode::Partial;
    throw UsageError("mode must be open, closed or partial");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw SceneParseError("cannot write \"" + path + "\"");
    out << content;
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

int run_check(const std::string& scene_ref, const std::string& point) {
    Scene s = load_scene(scene_ref);
    Vec2 x = parse_point(point);
    Verdict v = is_semiconvex_at(s, x);
    if (v.shadowed) {
        std::cout << "shadowed\n";
        return kExitVerdict;
    }
    std::cout << "free direction=" << fmt(*v.free_direction * kDegPerRad) << "\n";
    return kExitOk;
}

int run_weak(const std::string& scene_ref, int samples, bool critical) {
    Scene s = load_scene(scene_ref);
    WeakReport r = weak_semiconvexity_report(s, samples, critical);
    if (r.pass) {
        std::cout << "pass tested=" << r.tested << " discarded=" << r.discarded << "\n";
        return kExitOk;
    }
    const Vec2& p = r.failures.front().point;
    std::cout << "fail tested=" << r.tested << " failures=" << r.failures.size()
              << " first=(" << fmt(p.x()) << ", " << fmt(p.y()) << ")\n";
    return kExitVerdict;
}

int run_shadow(const std::string& scene_ref, double resolution, const std::string& svg_out) {
    Scene s = load_scene(scene_ref);
    ShadowRaster r = shadow_scan(s, resolution);
    std::cout << "cells=" << r.shadow_cell_count << " components=" << r.shadow_component_count
              << "\n";
    if (!svg_out.empty()) {
        SvgOverlays ov;
        ov.shadow = &r;
        write_file(svg_out, render_svg(s, ov));
    }
    return kExitOk;
}

int run_supports(const std::string& scene_ref, const std::string& point, bool inner_only) {
    Scene s = load_scene(scene_ref);
    Vec2 x = parse_point(point);
    std::vector<SupportRay> rays =
        inner_only ? inner_supporting_rays(s, x) : supporting_rays(s, x);
    std::cout << "rays=" << rays.size() << "\n";
    for (const SupportRay& r : rays) {
        std::cout << "angle=" << fmt(r.ray.angle * kDegPerRad) << " t=" << fmt(r.t_touch)
                  << " touch=(" << fmt(r.touch_point.x()) << ", " << fmt(r.touch_point.y())
                  << ") obstacle=" << r.touch_obstacle << " component=" << r.touch_component
                  << " inner=" << (r.inner ? 1 : 0) << "\n";
    }
    return kExitOk;
}

int run_audit(const std::string& scene_ref, double resolution, int samples,
              std::uint64_t seed, const std::string& csv_out) {
    Scene s = load_scene(scene_ref);
    AuditReport r = theorem_audit(s, resolution, samples, seed);
    std::cout << r.to_kv();
    if (!csv_out.empty()) write_file(csv_out, r.to_csv());
    return r.all_consistent() ? kExitOk : kExitVerdict;
}

int run_hull(const std::string& scene_ref, double resolution, int max_iter,
             const std::string& pgm_out, const std::string& svg_out) {
    Scene s = load_scene(scene_ref);
    HullRaster r = semiconvex_hull_grid(s, resolution, max_iter);
    int seeds = 0, added = 0;
    for (HullCell c : r.cells) {
        seeds += c == HullCell::seed;
        added += c == HullCell::added;
    }
    std::cout << "iterations=" << r.iterations << " converged=" << (r.converged ? 1 : 0)
              << " seed_cells=" << seeds << " added_cells=" << added
              << " last_delta=" << r.last_delta << "\n";
    if (!pgm_out.empty()) write_file(pgm_out, r.to_pgm());
    if (!svg_out.empty()) {
        SvgOverlays ov;
        ov.hull = &r;
        write_file(svg_out, render_svg(s, ov));
    }
    return r.converged ? kExitOk : kExitVerdict;
}

int run_solve_shadow(int kmax, const std::string& mode_text, std::uint64_t seed,
                     const std::string& out, bool unconstrained) {
    BoundaryMode mode = parse_mode(mode_text);
    SearchParams params;
    params.seed = seed;
    SolveResult r = solve_min_blocking(kmax, mode, params, unconstrained);
    if (!r.found) {
        std::cout << "k_min=none mode=" << mode_text << "\n";
        for (const auto& [k, m] : r.best_margin_per_k)
            std::cout << "k=" << k << " best_margin=" << fmt(m) << "\n";
        return kExitVerdict;
    }
    std::cout << "k_min=" << r.k_min << " mode=" << mode_text << " margin=" << fmt(r.margin)
              << "\n";
    std::string scene_text = serialize_scene(ring_config_scene(r.config));
    if (out.empty())
        std::cout << scene_text;
    else
        write_file(out, scene_text);
    return kExitOk;
}

int run_fixture(const std::string& name, const std::string& mode_text, const std::string& out) {
    Scene s = mode_text.empty() ? fixture(name) : fixture(name, parse_mode(mode_text));
    write_file(out, serialize_scene(s));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Planar visibility engine: ray blocking, shadow regions, supporting rays,"
                 " hull growth, and minimal blocking-ring search"};
    app.require_subcommand(1);

    std::string scene_ref, point, svg_out, pgm_out, csv_out, out, mode_text;
    double resolution = 0.1;
    int samples = 64, max_iter = 32, kmax = 6;
    std::uint64_t seed = 1234;
    bool no_critical = false, inner_only = false, unconstrained = false;

    CLI::App* check = app.add_subcommand("check", "Free-or-shadowed verdict at a point");
    check->add_option("scene", scene_ref)->required();
    check->add_option("--point", point)->required();

    CLI::App* weak = app.add_subcommand("weak", "Sampled boundary shadow search");
    weak->add_option("scene", scene_ref)->required();
    weak->add_option("--samples", samples);
    weak->add_flag("--no-critical", no_critical);

    CLI::App* shadow = app.add_subcommand("shadow", "Rasterized shadow region");
    shadow->add_option("scene", scene_ref)->required();
    shadow->add_option("--resolution", resolution)->required();
    shadow->add_option("--svg", svg_out);

    CLI::App* supports = app.add_subcommand("supports", "Supporting rays from a point");
    supports->add_option("scene", scene_ref)->required();
    supports->add_option("--point", point)->required();
    supports->add_flag("--inner", inner_only);

    CLI::App* audit = app.add_subcommand("audit", "Structure report and consistency checks");
    audit->add_option("scene", scene_ref)->required();
    audit->add_option("--resolution", resolution)->required();
    audit->add_option("--samples", samples)->required();
    audit->add_option("--seed", seed);
    audit->add_option("--csv", csv_out);

    CLI::App* hull = app.add_subcommand("hull", "Grid hull growth to fixpoint");
    hull->add_option("scene", scene_ref)->required();
    hull->add_option("--resolution", resolution)->required();
    hull->add_option("--max-iter", max_iter);
    hull->add_option("--pgm", pgm_out);
    hull->add_option("--svg", svg_out);

    CLI::App* solve = app.add_subcommand("solve-shadow", "Minimal blocking-ring search");
    solve->add_option("--kmax", kmax)->required();
    solve->add_option("--mode", mode_text)->required();
    solve->add_option("--seed", seed);
    solve->add_option("--out", out);
    solve->add_flag("--unconstrained-radii", unconstrained);

    CLI::App* fix = app.add_subcommand("fixture", "Write a built-in scene to a file");
    fix->add_option("name", scene_ref)->required();
    fix->add_option("--mode", mode_text);
    fix->add_option("--out", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(check)) return run_check(scene_ref, point);
        if (app.got_subcommand(weak)) return run_weak(scene_ref, samples, !no_critical);
        if (app.got_subcommand(shadow)) return run_shadow(scene_ref, resolution, svg_out);
        if (app.got_subcommand(supports)) return run_supports(scene_ref, point, inner_only);
        if (app.got_subcommand(audit))
            return run_audit(scene_ref, resolution, samples, seed, csv_out);
        if (app.got_subcommand(hull))
            return run_hull(scene_ref, resolution, max_iter, pgm_out, svg_out);
        if (app.got_subcommand(solve))
            return run_solve_shadow(kmax, mode_text, seed, out, unconstrained);
        if (app.got_subcommand(fix)) return run_fixture(scene_ref, mode_text, out);
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const SceneParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kExitParse;
    }
    return kExitUsage;
}
