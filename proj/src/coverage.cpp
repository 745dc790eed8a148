#include "semiconvex/coverage.hpp"

#include <algorithm>

namespace semiconvex {

namespace {

// Arc spanning counterclockwise from lo to hi with ray-verified endpoint
// closure: an endpoint is closed iff the grazing ray along it hits members.
Arc arc_with_ray_flags(const Obstacle& o, const Vec2& x, double lo, double hi,
                       double eps_space, double eps_angle) {
    bool lo_closed = ray_hits_obstacle(Ray{x, lo}, o, eps_space, eps_angle).hit;
    bool hi_closed = ray_hits_obstacle(Ray{x, hi}, o, eps_space, eps_angle).hit;
    return make_arc(lo, hi, lo_closed, hi_closed);
}

// Entering-direction cone for a boundary viewpoint.
Arc boundary_cone(const Obstacle& o, const Vec2& x, double eps_space, double eps_angle) {
    if (const ConvexPolygon* poly = std::get_if<ConvexPolygon>(&o.shape)) {
        size_t n = poly->vertices.size();
        // Vertex case: the open interior wedge between the two incident edges.
        for (size_t i = 0; i < n; ++i) {
            if ((x - poly->vertices[i]).norm() <= eps_space) {
                const Vec2& v = poly->vertices[i];
                const Vec2& w = poly->vertices[(i + 1) % n];
                const Vec2& u = poly->vertices[(i + n - 1) % n];
                return arc_with_ray_flags(o, x, direction_of(w - v), direction_of(u - v),
                                          eps_space, eps_angle);
            }
        }
        // Edge case: open half-circle around the inward normal.
        for (size_t i = 0; i < n; ++i) {
            const Vec2& a = poly->vertices[i];
            const Vec2& b = poly->vertices[(i + 1) % n];
            if (point_segment_distance(x, a, b) <= eps_space) {
                double inward = direction_of(Vec2(-(b - a).y(), (b - a).x()));
                return arc_with_ray_flags(o, x, inward - 0.5 * kPi, inward + 0.5 * kPi,
                                          eps_space, eps_angle);
            }
        }
        throw std::logic_error("boundary_cone: point not on the polygon boundary");
    }
    // Disk and capsule: boundary is smooth; the inward direction points at the
    // nearest core point (disk center / axis point), and the cone is the open
    // half-circle around it. Ray-checked flags close a capsule's along-side
    // limits for member flats and leave disks fully open.
    Vec2 core;
    if (const Disk* d = std::get_if<Disk>(&o.shape)) {
        core = d->center;
    } else {
        const Capsule& c = std::get<Capsule>(o.shape);
        core = closest_point_on_segment(x, c.a, c.b);
    }
    double inward = direction_of(core - x);
    return arc_with_ray_flags(o, x, inward - 0.5 * kPi, inward + 0.5 * kPi, eps_space,
                              eps_angle);
}

}  // namespace

ArcSet hit_arc(const Obstacle& o, const Vec2& x, double eps_space, double eps_angle) {
    double sd = signed_distance(o, x);
    if (sd < -eps_space)
        throw std::invalid_argument("hit_arc: viewpoint strictly inside the obstacle");
    Arc arc;
    if (sd <= eps_space) {
        arc = boundary_cone(o, x, eps_space, eps_angle);
    } else {
        auto [lo, hi] = footprint_extreme_directions(o, x);
        arc = arc_with_ray_flags(o, x, lo, hi, eps_space, eps_angle);
    }
    return canonicalize({arc}, eps_angle);
}

ArcSet direction_cover(const Scene& s, const Vec2& x) {
    std::vector<size_t> all(s.obstacles.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    return direction_cover(s, x, all);
}

ArcSet direction_cover(const Scene& s, const Vec2& x, const std::vector<size_t>& idxs) {
    std::vector<Arc> arcs;
    arcs.reserve(idxs.size());
    for (size_t i : idxs) {
        ArcSet one = hit_arc(s.obstacles[i], x, s.eps_space, s.eps_angle);
        arcs.insert(arcs.end(), one.begin(), one.end());
    }
    return canonicalize(arcs, s.eps_angle);
}

Verdict is_semiconvex_at(const Scene& s, const Vec2& x) {
    Verdict v;
    v.cover = direction_cover(s, x);
    if (arcset_covers_circle(v.cover)) {
        v.shadowed = true;
        return v;
    }
    // Witness search: midpoints of complement arcs (the direction itself for
    // degenerate gaps), each verified against the ray caster.
    ArcSet comp = arcset_complement(v.cover, s.eps_angle);
    for (const Arc& gap : comp) {
        double cand = (gap.width <= s.eps_angle)
                          ? gap.start
                          : normalize_angle(gap.start + 0.5 * gap.width);
        if (!any_hit(s, Ray{x, cand})) {
            v.free_direction = cand;
            return v;
        }
    }
    throw std::runtime_error(
        "is_semiconvex_at: cover reports an uncovered direction but every witness ray "
        "hits — arc algebra and ray caster disagree");
}

bool is_projected(const Scene& s, const std::vector<size_t>& group,
                  const std::vector<size_t>& others, const Vec2& x) {
    ArcSet mine = direction_cover(s, x, group);
    ArcSet rest = direction_cover(s, x, others);
    return arcset_contains(rest, mine, s.eps_angle);
}

}  // namespace semiconvex
