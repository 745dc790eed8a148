#pragma once

#include <optional>

#include "semiconvex/raycast.hpp"

namespace semiconvex {

// Directions whose open ray from x meets the obstacle's point set.
//
// Exterior x: the footprint arc between the two tangent directions; each
// endpoint is closed iff the grazing ray genuinely hits (so Closed boundaries
// give closed endpoints, Open give open ones, Partial disks follow the
// angular membership of the tangent contact point).
//
// x on the obstacle's boundary: the cone of entering directions — an open
// half-circle at smooth points, the open interior wedge at polygon vertices —
// with each of the two cone-limit directions included iff the ray along it
// hits members farther out (it can for polygon/capsule flats, never for a
// disk, whose tangent ray meets only the excluded origin).
//
// Throws std::invalid_argument when x is strictly inside the obstacle.
ArcSet hit_arc(const Obstacle& o, const Vec2& x, double eps_space = kDefaultEpsSpace,
               double eps_angle = kDefaultEpsAngle);

// Union of hit_arc over all obstacles (throws if x is strictly inside one).
ArcSet direction_cover(const Scene& s, const Vec2& x);

// Union of hit_arc over a subset of obstacles given by indices into
// s.obstacles.
ArcSet direction_cover(const Scene& s, const Vec2& x, const std::vector<size_t>& idxs);

struct Verdict {
    bool shadowed = false;
    std::optional<double> free_direction;  // verified by first_hit: no hit
    ArcSet cover;
};

// Shadow test at x (exterior to or on the boundary of the union). shadowed
// iff the cover is the full circle; otherwise free_direction carries an
// uncovered direction double-checked against the ray caster. A cover/raycast
// contradiction (an arc-algebra bug) raises std::runtime_error.
Verdict is_semiconvex_at(const Scene& s, const Vec2& x);

// Is the angular footprint of the obstacles in `group` contained (as a
// closure-aware point set on S^1) in the footprint of `others`, seen from x?
// Implements "every ray from x meeting the group also meets the others".
bool is_projected(const Scene& s, const std::vector<size_t>& group,
                  const std::vector<size_t>& others, const Vec2& x);

}  // namespace semiconvex
