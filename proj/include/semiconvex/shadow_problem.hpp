#pragma once

// Blocking-ring search: k pairwise-disjoint disks centered on the unit
// circle that together occlude every ray leaving the origin.  Feasibility
// of a given ring, the symmetric-configuration impossibility table, and a
// randomized search for the minimal blocking count.

#include <semiconvex/coverage.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semiconvex {

struct RingConfig {
    int k = 0;
    std::vector<double> angles;  // disk i sits at (cos angles[i], sin angles[i])
    std::vector<double> radii;   // in (0, 1): the origin stays outside every disk
    BoundaryMode mode = BoundaryMode::Closed;  // Open or Closed only
};

struct RingValidity {
    bool valid = false;
    std::vector<std::string> violations;
};

// Checks structural sanity, the radius window, and strict pairwise
// disjointness (chord between centers exceeds the radius sum by more than
// eps_space).  With unconstrained_radii, open-mode radii may reach 1: the
// origin then lies on a boundary the open disk does not own.
RingValidity ring_config_valid(const RingConfig& c, double eps_space = kDefaultEpsSpace,
                               bool unconstrained_radii = false);

// The ring as a scene of k disks, ids in input order.  Throws
// std::invalid_argument when the config fails ring_config_valid.
Scene ring_config_scene(const RingConfig& c);

// True when every ray from the origin meets a disk: the blocked directions
// of disk i form the arc angles[i] +- asin(radii[i]), owned per mode, and
// the verdict is the engine's shadow test at the origin.  Throws on an
// invalid config.
bool ring_config_shadowed(const RingConfig& c);

// Uncovered angular measure of the blocked-direction arcs; 0 when the
// closures cover the whole circle.  Ignores open/closed ownership, which
// only matters at isolated abutment directions.
double coverage_deficit(const RingConfig& c);

// Smallest of all feasibility slacks: pairwise chord surplus, radius
// window clearance, and the overlap depth at each junction of the sorted
// blocked arcs (radians).  Positive iff the ring robustly blocks every
// direction while staying strictly disjoint and in the radius window.
double config_margin(const RingConfig& c, double eps_space = kDefaultEpsSpace,
                     bool unconstrained_radii = false);

// Rotation-unique normal form: disks sorted by angle, rebased so angles[0]
// is 0, starting at the cyclic shift with the lexicographically smallest
// (gap sequence, radii) reading.  Margins and feasibility are
// rotation-invariant, so rotated copies canonicalize alike.
RingConfig canonical_rotation(const RingConfig& c);

struct SymmetricRow {
    int k = 0;
    double sup_radius = 0.0;  // sin(pi/k): the unreachable disjointness limit
    double deficit = 0.0;     // uncovered measure just inside that limit
};

// Equal radii at uniform angles can never block: at the supremal radius the
// arcs would only just abut, and strict disjointness keeps every admissible
// radius below it.  Rows for k = 2..k_max evaluate the deficit at
// sup_radius - 1e-6.
std::vector<SymmetricRow> symmetric_infeasibility_scan(int k_max);

struct SearchParams {
    int restarts = 48;
    int iterations = 600;
    double initial_step = 0.35;
    double step_decay = 0.995;  // per accepted-or-not iteration
    std::uint64_t seed = 1234;
};

struct SolveResult {
    bool found = false;
    int k_min = 0;
    RingConfig config;    // canonical certified ring when found
    double margin = 0.0;  // config_margin of that ring
    std::vector<std::pair<int, double>> best_margin_per_k;
    bool certificate_valid = false;     // ring_config_valid re-check
    bool certificate_shadowed = false;  // engine shadow test at the origin
    bool certificate_oracle = false;    // dense ray sweep + tangency directions
};

// For k = 2..k_max ascending, multi-start hill climbing over (gaps, radii)
// maximizing config_margin; the first k whose best ring passes the full
// certificate is reported as k_min.  Deterministic for fixed params: each
// (seed, k, restart) derives its own rng stream and restarts merge by best
// margin with lowest-restart tie-break.
SolveResult solve_min_blocking(int k_max, BoundaryMode mode, const SearchParams& params = {},
                               bool unconstrained_radii = false);

}  // namespace semiconvex
