#include <semiconvex/shadow_problem.hpp>

#include <semiconvex/raycast.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace semiconvex {

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

double radius_cap(BoundaryMode mode, double eps, bool unconstrained) {
    // An open disk of radius 1 centered on the unit circle still leaves the
    // origin outside; a closed one would own it.
    if (unconstrained && mode == BoundaryMode::Open) return 1.0;
    return 1.0 - eps;
}

bool structurally_sound(const RingConfig& c, std::vector<std::string>* why) {
    bool ok = true;
    auto note = [&](std::string msg) {
        ok = false;
        if (why) why->push_back(std::move(msg));
    };
    if (c.k < 1) note("k must be at least 1");
    if (static_cast<int>(c.angles.size()) != c.k)
        note("angles holds " + std::to_string(c.angles.size()) + " entries for k=" +
             std::to_string(c.k));
    if (static_cast<int>(c.radii.size()) != c.k)
        note("radii holds " + std::to_string(c.radii.size()) + " entries for k=" +
             std::to_string(c.k));
    if (c.mode == BoundaryMode::Partial) note("mode must be open or closed");
    return ok;
}

double half_width(double r) { return std::asin(std::clamp(r, 0.0, 1.0)); }

// Minimal overlap depth at the junctions of the blocked arcs, walking the
// disks in sorted angular order.  Positive at every junction means the
// chain of arcs wraps the whole circle with room to spare.
double chain_cover_slack(const std::vector<double>& angles, const std::vector<double>& radii) {
    const int k = static_cast<int>(angles.size());
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> norm(k);
    for (int i = 0; i < k; ++i) norm[i] = normalize_angle(angles[i]);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return norm[a] < norm[b]; });

    double slack = std::numeric_limits<double>::infinity();
    for (int j = 0; j < k; ++j) {
        int i = order[j];
        int n = order[(j + 1) % k];
        double gap = norm[n] - norm[i];
        if (j + 1 == k) gap += kTwoPi;
        slack = std::min(slack, half_width(radii[i]) + half_width(radii[n]) - gap);
    }
    return slack;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct Candidate {
    std::vector<double> gaps;   // k positive gaps summing to 2*pi; angle 0 first
    std::vector<double> radii;
};

RingConfig to_config(const Candidate& cand, BoundaryMode mode) {
    RingConfig c;
    c.k = static_cast<int>(cand.gaps.size());
    c.mode = mode;
    c.radii = cand.radii;
    c.angles.resize(c.k);
    double acc = 0.0;
    for (int i = 0; i < c.k; ++i) {
        c.angles[i] = acc;
        acc += cand.gaps[i];
    }
    return c;
}

void renormalize_gaps(std::vector<double>& gaps) {
    double sum = 0.0;
    for (double& g : gaps) {
        g = std::max(g, 0.02);
        sum += g;
    }
    for (double& g : gaps) g *= kTwoPi / sum;
}

}  // namespace

RingValidity ring_config_valid(const RingConfig& c, double eps_space, bool unconstrained_radii) {
    RingValidity v;
    if (!structurally_sound(c, &v.violations)) return v;

    const double cap = radius_cap(c.mode, eps_space, unconstrained_radii);
    for (int i = 0; i < c.k; ++i) {
        double r = c.radii[i];
        if (!(r > eps_space) || !(r <= cap))
            v.violations.push_back("radius " + std::to_string(i) + " = " + fmt(r) +
                                   " outside (0, " + fmt(cap) + "]");
    }
    for (int i = 0; i < c.k; ++i) {
        for (int j = i + 1; j < c.k; ++j) {
            double chord = 2.0 * std::sin(angle_distance(c.angles[i], c.angles[j]) / 2.0);
            double sum = c.radii[i] + c.radii[j];
            if (!(chord > sum + eps_space))
                v.violations.push_back("disks " + std::to_string(i) + " and " +
                                       std::to_string(j) + " not strictly disjoint (chord " +
                                       fmt(chord) + " vs radii sum " + fmt(sum) + ")");
        }
    }
    v.valid = v.violations.empty();
    return v;
}

Scene ring_config_scene(const RingConfig& c) {
    RingValidity v = ring_config_valid(c);
    if (!v.valid) throw std::invalid_argument("invalid ring config: " + v.violations.front());
    Scene s;
    s.obstacles.reserve(c.k);
    for (int i = 0; i < c.k; ++i) {
        Obstacle o;
        o.id = i;
        o.mode = c.mode;
        o.shape = Disk{Vec2{std::cos(c.angles[i]), std::sin(c.angles[i])}, c.radii[i]};
        s.obstacles.push_back(std::move(o));
    }
    return s;
}

bool ring_config_shadowed(const RingConfig& c) {
    Scene s = ring_config_scene(c);
    return is_semiconvex_at(s, Vec2{0.0, 0.0}).shadowed;
}

double coverage_deficit(const RingConfig& c) {
    if (!structurally_sound(c, nullptr)) throw std::invalid_argument("malformed ring config");
    bool closed = c.mode == BoundaryMode::Closed;
    ArcSet arcs;
    for (int i = 0; i < c.k; ++i) {
        double a = half_width(c.radii[i]);
        double phi = normalize_angle(c.angles[i]);
        arcs.push_back(make_arc(phi - a, phi + a, closed, closed));
    }
    arcs = canonicalize(arcs);
    return std::max(0.0, kTwoPi - arcset_measure(arcs));
}

double config_margin(const RingConfig& c, double eps_space, bool unconstrained_radii) {
    if (!structurally_sound(c, nullptr)) return -1e9;
    const double cap = radius_cap(c.mode, eps_space, unconstrained_radii);
    double m = std::numeric_limits<double>::infinity();
    for (int i = 0; i < c.k; ++i) {
        m = std::min(m, c.radii[i] - eps_space);
        m = std::min(m, cap - c.radii[i]);
    }
    for (int i = 0; i < c.k; ++i)
        for (int j = i + 1; j < c.k; ++j) {
            double chord = 2.0 * std::sin(angle_distance(c.angles[i], c.angles[j]) / 2.0);
            m = std::min(m, chord - (c.radii[i] + c.radii[j]));
        }
    m = std::min(m, chain_cover_slack(c.angles, c.radii));
    return m;
}

RingConfig canonical_rotation(const RingConfig& c) {
    RingConfig out = c;
    const int k = static_cast<int>(c.angles.size());
    if (k == 0) return out;
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> norm(k);
    for (int i = 0; i < k; ++i) norm[i] = normalize_angle(c.angles[i]);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return norm[a] < norm[b]; });

    std::vector<double> gaps(k), radii(k);
    for (int i = 0; i < k; ++i) {
        double g = norm[order[(i + 1) % k]] - norm[order[i]];
        gaps[i] = (i + 1 == k) ? g + kTwoPi : g;
        radii[i] = c.radii[order[i]];
    }

    // Rotation only shifts which disk comes first; pick the cyclic shift
    // with the lexicographically smallest (gaps, radii) reading.
    int best = 0;
    for (int j = 1; j < k; ++j) {
        for (int i = 0; i < k; ++i) {
            double a = gaps[(j + i) % k], b = gaps[(best + i) % k];
            if (a != b) {
                if (a < b) best = j;
                goto decided;
            }
        }
        for (int i = 0; i < k; ++i) {
            double a = radii[(j + i) % k], b = radii[(best + i) % k];
            if (a != b) {
                if (a < b) best = j;
                break;
            }
        }
    decided:;
    }

    double acc = 0.0;
    for (int i = 0; i < k; ++i) {
        out.angles[i] = acc;
        out.radii[i] = radii[(best + i) % k];
        acc += gaps[(best + i) % k];
    }
    return out;
}

std::vector<SymmetricRow> symmetric_infeasibility_scan(int k_max) {
    if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
    std::vector<SymmetricRow> rows;
    rows.reserve(k_max - 1);
    for (int k = 2; k <= k_max; ++k) {
        SymmetricRow row;
        row.k = k;
        row.sup_radius = std::sin(kPi / k);
        double r = row.sup_radius - 1e-6;
        row.deficit = kTwoPi - 2.0 * k * std::asin(r);
        rows.push_back(row);
    }
    return rows;
}

SolveResult solve_min_blocking(int k_max, BoundaryMode mode, const SearchParams& params,
                               bool unconstrained_radii) {
    if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
    if (mode == BoundaryMode::Partial)
        throw std::invalid_argument("mode must be open or closed");

    SolveResult result;
    const double eps = kDefaultEpsSpace;
    const double cap = radius_cap(mode, eps, unconstrained_radii);

    for (int k = 2; k <= k_max; ++k) {
        double best_margin = -std::numeric_limits<double>::infinity();
        Candidate best;

        for (int restart = 0; restart < params.restarts; ++restart) {
            std::uint64_t stream =
                splitmix64(splitmix64(splitmix64(params.seed) ^ static_cast<std::uint64_t>(k)) ^
                           static_cast<std::uint64_t>(restart));
            std::mt19937_64 rng(stream);
            std::uniform_real_distribution<double> uni(0.0, 1.0);
            std::normal_distribution<double> gauss(0.0, 1.0);

            Candidate cur;
            cur.gaps.resize(k);
            cur.radii.resize(k);
            for (double& g : cur.gaps) g = 0.2 + uni(rng);
            renormalize_gaps(cur.gaps);
            for (double& r : cur.radii) r = std::clamp(0.3 + 0.65 * uni(rng), 0.05, cap);

            double cur_margin = config_margin(to_config(cur, mode), eps, unconstrained_radii);
            double step = params.initial_step;
            for (int it = 0; it < params.iterations; ++it) {
                Candidate next = cur;
                for (double& g : next.gaps) g += step * gauss(rng) * (kTwoPi / k) * 0.5;
                renormalize_gaps(next.gaps);
                for (double& r : next.radii)
                    r = std::clamp(r + step * gauss(rng) * 0.25, 0.05, cap);
                double next_margin =
                    config_margin(to_config(next, mode), eps, unconstrained_radii);
                if (next_margin > cur_margin) {
                    cur = std::move(next);
                    cur_margin = next_margin;
                }
                step *= params.step_decay;
            }
            if (cur_margin > best_margin) {
                best_margin = cur_margin;
                best = cur;
            }
        }

        result.best_margin_per_k.emplace_back(k, best_margin);
        if (!(best_margin > 0.0)) continue;

        RingConfig cfg = canonical_rotation(to_config(best, mode));
        RingValidity validity = ring_config_valid(cfg, eps, unconstrained_radii);
        result.certificate_valid = validity.valid;
        result.certificate_shadowed = validity.valid && ring_config_shadowed(cfg);

        bool oracle = false;
        if (result.certificate_shadowed) {
            Scene s = ring_config_scene(cfg);
            oracle = oracle_shadowed(s, Vec2{0.0, 0.0}, 1000000);
            for (int i = 0; i < cfg.k && oracle; ++i) {
                // Grazing directions of each disk must still be blocked by a
                // neighbor (or by the disk itself when it owns its boundary).
                double a = half_width(cfg.radii[i]);
                for (double dir : {cfg.angles[i] - a, cfg.angles[i] + a})
                    oracle = oracle && any_hit(s, Ray{Vec2{0.0, 0.0}, normalize_angle(dir)});
            }
        }
        result.certificate_oracle = oracle;

        if (result.certificate_valid && result.certificate_shadowed && result.certificate_oracle) {
            result.found = true;
            result.k_min = k;
            result.config = cfg;
            result.margin = config_margin(cfg, eps, unconstrained_radii);
            break;
        }
        result.certificate_valid = result.certificate_shadowed = result.certificate_oracle = false;
    }
    return result;
}

}  // namespace semiconvex
