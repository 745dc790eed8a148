#pragma once

#include <optional>
#include <vector>

#include "semiconvex/geom.hpp"

namespace semiconvex {

// Closed/open arc of directions on S^1, counterclockwise from start over
// width radians. Point set: {start + u : 0 <= u <= width} mod 2*pi, with the
// two endpoint flags deciding membership of u = 0 and u = width.
//
// width == 0 is a single direction (both flags closed by canonical form).
// width == 2*pi with at least one closed flag is the full circle; with both
// flags open it is the circle minus the single direction `start`.
struct Arc {
    double start = 0.0;  // in [0, 2*pi)
    double width = 0.0;  // in [0, 2*pi]
    bool start_closed = true;
    bool end_closed = true;

    double end() const { return start + width; }  // may exceed 2*pi (wrapping arc)
    bool is_full_circle() const { return width >= kTwoPi && (start_closed || end_closed); }
};

inline Arc make_arc(double start, double end, bool start_closed, bool end_closed) {
    double s = normalize_angle(start);
    double w = end - start;
    if (w < 0.0) w = normalize_angle(w);
    if (w > kTwoPi) w = kTwoPi;
    return Arc{s, w, start_closed, end_closed};
}

inline Arc full_circle() { return Arc{0.0, kTwoPi, true, true}; }
inline Arc degenerate_arc(double theta) { return Arc{normalize_angle(theta), 0.0, true, true}; }

// Canonical, disjoint, sorted-by-start list of maximal arcs. Obtain one only
// through canonicalize()/arcset_* so the invariants hold.
using ArcSet = std::vector<Arc>;

// Collapses eps-width arcs, splits wrapping arcs at the 0/2*pi cut, merges
// overlapping and closure-abutting arcs, and re-glues across the cut. Two
// endpoints within eps_angle are treated as equal; closure flags are OR-ed
// where endpoints coincide. Idempotent.
ArcSet canonicalize(const std::vector<Arc>& arcs, double eps_angle = kDefaultEpsAngle);

ArcSet arcset_union(const ArcSet& a, const ArcSet& b, double eps_angle = kDefaultEpsAngle);

// Complement as a point set on S^1; closure flags flip. Involution.
ArcSet arcset_complement(const ArcSet& a, double eps_angle = kDefaultEpsAngle);

bool arcset_covers_circle(const ArcSet& a);

// A direction witnessing non-coverage: midpoint of a complement arc (the
// direction itself for a degenerate complement arc). nullopt iff covered.
std::optional<double> uncovered_direction(const ArcSet& a, double eps_angle = kDefaultEpsAngle);

double arcset_measure(const ArcSet& a);

// Membership of a single direction, closure-aware; directions within
// eps_angle of an arc endpoint take that endpoint's flag.
bool arcset_contains_direction(const ArcSet& a, double theta, double eps_angle = kDefaultEpsAngle);

// Structural equality of canonical sets with eps_angle endpoint tolerance.
bool arcset_equal(const ArcSet& a, const ArcSet& b, double eps_angle = kDefaultEpsAngle);

// Point-set containment: inner subset-of outer (closure-aware). Decided via
// arcset_union(outer, inner) == outer, which canonical uniqueness justifies.
bool arcset_contains(const ArcSet& outer, const ArcSet& inner,
                     double eps_angle = kDefaultEpsAngle);

}  // namespace semiconvex
