#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "semiconvex/coverage.hpp"

namespace semiconvex {

// Connected components of the obstacle union. Two obstacles join when their
// interiors overlap, or when their closures touch and at least one of them
// actually includes a touch point (an excluded tangency point joins nothing).
struct ComponentPartition {
    std::vector<std::vector<size_t>> groups;  // obstacle indices, each sorted; ordered by first index
    std::vector<size_t> component_of;         // obstacle index -> group index
    std::vector<bool> smooth;                 // group boundary is C^1: a single free-standing disk or capsule
};

ComponentPartition components(const Scene& s);

struct BoundarySample {
    Vec2 point;
    size_t obstacle;   // index into s.obstacles
    size_t component;  // index into partition groups
    bool critical;     // vertex / tangency / axis-extreme / arc-endpoint sample
};

// Uniform boundary samples per obstacle plus (optionally) the decision-critical
// points: polygon vertices, axis extremes, partial-arc endpoints, pairwise
// touch points, and contact points of common tangent lines between smooth
// features. Samples strictly interior to another obstacle are dropped.
std::vector<BoundarySample> boundary_samples(const Scene& s, int n_per_obstacle,
                                             bool include_critical);

struct WeakReport {
    bool pass = true;
    int tested = 0;
    int discarded = 0;
    bool critical_included = true;
    std::vector<BoundarySample> failures;  // samples from which every ray hits E
};

// Sampled weak 1-semiconvexity: every tested boundary point must keep some
// open ray free of E.
WeakReport weak_semiconvexity_report(const Scene& s, int n_per_obstacle = 64,
                                     bool include_critical = true);

enum class CellClass : unsigned char {
    occupied,  // cell center inside E or on its boundary band
    free,      // exterior, has a free ray
    shadowed,  // exterior, every sampled/exact ray hits E
};

struct ShadowRaster {
    BBox box;
    double resolution = 0.0;
    int nx = 0, ny = 0;
    std::vector<CellClass> cells;  // row-major, index = iy*nx + ix
    int shadow_cell_count = 0;
    int shadow_component_count = 0;  // 8-connected shadowed regions

    int index(int ix, int iy) const { return iy * nx + ix; }
    CellClass at(int ix, int iy) const { return cells[static_cast<size_t>(index(ix, iy))]; }
    Vec2 cell_center(int ix, int iy) const {
        return box.lo + Vec2{(ix + 0.5) * resolution, (iy + 0.5) * resolution};
    }
};

// Classifies every grid cell center over the padded scene bounds and labels
// the 8-connected shadowed regions.
ShadowRaster shadow_scan(const Scene& s, double resolution);

struct SupportRay {
    Ray ray;
    double t_touch = 0.0;  // first closure contact along the ray
    Vec2 touch_point;
    size_t touch_obstacle = 0;   // index into s.obstacles
    size_t touch_component = 0;  // index into partition groups
    bool inner = false;
    // Components hit strictly beyond the touch, with their first member-hit
    // parameter, ascending by component index.
    std::vector<std::pair<size_t, double>> hits_beyond;
};

// Rays from exterior point x that touch the boundary of their first-contact
// component without ever meeting that component's interior. Candidates are the
// footprint extreme directions of every obstacle, deduplicated within
// eps_angle (ties keep the lower obstacle id, then the lower angle). Sorted by
// angle. Throws std::invalid_argument if x is inside or on the closure of E.
std::vector<SupportRay> supporting_rays(const Scene& s, const Vec2& x);

// The subset whose touch happens strictly before a member hit of a different
// component.
std::vector<SupportRay> inner_supporting_rays(const Scene& s, const Vec2& x);

struct TheoremLine {
    std::string name;
    bool applicable = false;
    bool consistent = true;  // stays true when inapplicable
    std::string details;
};

struct AuditReport {
    int n_components = 0;
    bool all_smooth = false;
    int n_open = 0, n_closed = 0, n_partial = 0;
    bool weak_pass = false;
    int weak_tested = 0;
    int shadow_cell_count = 0;
    int shadow_component_count = 0;
    bool shadow_nonempty = false;
    bool ring_detected = false;
    std::vector<TheoremLine> lines;  // stable order, see theorem_audit

    bool all_consistent() const;
    std::string to_kv() const;   // flat key=value block
    std::string to_csv() const;  // one line per check
};

// Cross-checks the structural statements relating weak semiconvexity, shadow
// regions, component counts, smoothness, projections, and supporting rays.
// Checks, in order: thm1 (weak && shadow => >= 2 components), three_components
// (all-open: => >= 3), thm2 (smooth, uniform open/closed: => > 2), thm3
// (all-open smooth: => >= 4), corollary1 (weak single component => no shadow),
// lemma2 (single smooth component: exactly two supporting rays from random
// exterior points), lemma3 (no component projected from tested shadow cells),
// lemma4 (inner supporting ray exists at tested shadow cells), prop1 (all-open
// shadow-free => weak passes), prop2 (cycle-free component groups are simply
// connected; ring-like unions reported inapplicable).
AuditReport theorem_audit(const Scene& s, double resolution, int samples_per_obstacle,
                          std::uint64_t seed = 1234);

}  // namespace semiconvex
