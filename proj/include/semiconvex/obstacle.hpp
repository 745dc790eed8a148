#pragma once

#include <string>
#include <variant>
#include <vector>

#include "semiconvex/arcs.hpp"
#include "semiconvex/geom.hpp"

namespace semiconvex {

// Which boundary points belong to the obstacle's point set. Partial applies
// to disks only: boundary membership is decided by the angular position of
// the boundary point (seen from the disk center) against `included`.
enum class BoundaryMode { Open, Closed, Partial };

struct Disk {
    Vec2 center{0.0, 0.0};
    double radius = 1.0;
};

// Counterclockwise, strictly convex (no three collinear vertices), >= 3 vertices.
struct ConvexPolygon {
    std::vector<Vec2> vertices;
};

// Convex hull of two radius-r disks centered at a and b; a != b.
struct Capsule {
    Vec2 a{0.0, 0.0};
    Vec2 b{1.0, 0.0};
    double radius = 1.0;
};

using Shape = std::variant<Disk, ConvexPolygon, Capsule>;

struct Obstacle {
    int id = 0;
    BoundaryMode mode = BoundaryMode::Closed;
    ArcSet included;  // Partial disks: included boundary intervals, radians
    Shape shape;

    bool is_disk() const { return std::holds_alternative<Disk>(shape); }
    bool is_polygon() const { return std::holds_alternative<ConvexPolygon>(shape); }
    bool is_capsule() const { return std::holds_alternative<Capsule>(shape); }
};

// Throws std::invalid_argument naming the violated invariant (radius > 0,
// strict convexity and CCW order, capsule endpoints distinct, Partial => disk).
void validate_obstacle(const Obstacle& o, double eps_space = kDefaultEpsSpace);

// Distance to the shape's boundary: negative strictly inside, ~0 on the
// boundary, positive outside. Mode-independent (pure geometry of the closure).
double signed_distance(const Obstacle& o, const Vec2& p);

// Is the boundary point p a member of the obstacle's point set? (Mode rules;
// Partial tests the angular position of p from the disk center.)
bool boundary_member(const Obstacle& o, const Vec2& p, double eps_angle = kDefaultEpsAngle);

// Full membership: interior always yes, boundary per boundary_member,
// outside never. Points within eps_space of the boundary count as boundary.
bool contains_point(const Obstacle& o, const Vec2& p, double eps_space = kDefaultEpsSpace,
                    double eps_angle = kDefaultEpsAngle);

// Farthest point of the closure in direction u (|u| = 1).
Vec2 support_point(const Obstacle& o, const Vec2& u);

BBox obstacle_bbox(const Obstacle& o);

// Signed separation between the closures: positive gap when disjoint,
// ~0 when touching, negative when the interiors overlap (magnitude of the
// negative value is not meaningful for deep polygon overlaps).
double obstacle_separation(const Obstacle& a, const Obstacle& b);

// Representative closest-point pair between the two closures (meaningful for
// disjoint or touching obstacles; for overlapping ones any witness is fine).
std::pair<Vec2, Vec2> closest_points(const Obstacle& a, const Obstacle& b);

// Extreme (tangent) directions of the closure's angular footprint seen from a
// point x strictly outside the closure: the footprint arc runs
// counterclockwise from .first to .second and is strictly narrower than pi.
std::pair<double, double> footprint_extreme_directions(const Obstacle& o, const Vec2& x);

struct Scene {
    std::vector<Obstacle> obstacles;
    double eps_angle = kDefaultEpsAngle;
    double eps_space = kDefaultEpsSpace;

    // Bounding box of all obstacle closures, each axis padded by 10% of the
    // larger extent. Empty scene: [-1,1]^2.
    BBox bbox() const;
};

// Validates every obstacle and checks ids are unique and non-negative.
void validate_scene(const Scene& s);

}  // namespace semiconvex
