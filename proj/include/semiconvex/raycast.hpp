#pragma once

#include "semiconvex/obstacle.hpp"

namespace semiconvex {

// Contact of an open ray with one obstacle, before boundary-mode rules.
//
// Contact parameters follow a first-positive-root convention: roots are the
// parameters where the ray's line meets the obstacle's closure boundary;
// t_touch is the smallest root exceeding eps_space. When the origin lies
// inside the closure and the ray exits through it, t_touch is the exit root
// (members are crossed before it, but the origin itself is excluded from the
// ray, so the exit root is the first positive contact root). t_exit is the
// last closure-contact parameter.
struct RayContact {
    enum class Kind { miss, graze, cross } kind = Kind::miss;
    double t_touch = 0.0;
    double t_exit = 0.0;
    Vec2 touch_point{0.0, 0.0};
    bool boundary_member_hit = false;  // graze only: touched point is a member
};

// Classifies the ray against the obstacle's closure. graze = the ray meets
// the boundary but never the interior (tangency, vertex pass, or riding a
// flat side); cross = the interior is met.
RayContact ray_contact(const Ray& r, const Obstacle& o, double eps_space = kDefaultEpsSpace,
                       double eps_angle = kDefaultEpsAngle);

struct HitResult {
    bool hit = false;
    double t_first = 0.0;
    Vec2 point{0.0, 0.0};
    int obstacle_id = -1;
};

// Does the open ray meet the obstacle's point set (boundary-mode aware)?
// Tangent contacts hit iff the touched boundary point is a member. For
// crossings, t_first is the entry root even for open boundaries (the members
// begin immediately past it; the infimum is reported with a boundary point).
HitResult ray_hits_obstacle(const Ray& r, const Obstacle& o,
                            double eps_space = kDefaultEpsSpace,
                            double eps_angle = kDefaultEpsAngle);

// Minimal t_first over all obstacles; ties within eps_space go to the lowest
// obstacle id. No obstacles hit => hit == false.
HitResult first_hit(const Scene& s, const Ray& r);

// Early-out membership test: does any obstacle hit along the ray?
bool any_hit(const Scene& s, const Ray& r);

// Ground-truth comparator for coverage decisions: true iff all n_dirs
// uniformly spaced directions from x, plus both footprint-extreme (tangency)
// directions of every obstacle injected exactly, yield a hit. Throws
// std::invalid_argument if x is strictly inside an obstacle closure.
bool oracle_shadowed(const Scene& s, const Vec2& x, int n_dirs);

}  // namespace semiconvex
