#include "semiconvex/obstacle.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace semiconvex {

namespace {

bool point_in_polygon(const ConvexPolygon& poly, const Vec2& p) {
    size_t n = poly.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = poly.vertices[i];
        const Vec2& b = poly.vertices[(i + 1) % n];
        if (cross2(b - a, p - a) < 0.0) return false;  // right of a CCW edge
    }
    return true;
}

double polygon_boundary_distance(const ConvexPolygon& poly, const Vec2& p) {
    double best = std::numeric_limits<double>::infinity();
    size_t n = poly.vertices.size();
    for (size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(p, poly.vertices[i],
                                                     poly.vertices[(i + 1) % n]));
    return best;
}

double segment_segment_distance(const Vec2& a1, const Vec2& a2, const Vec2& b1,
                                const Vec2& b2) {
    // Proper crossing means distance zero.
    double d1 = cross2(a2 - a1, b1 - a1);
    double d2 = cross2(a2 - a1, b2 - a1);
    double d3 = cross2(b2 - b1, a1 - b1);
    double d4 = cross2(b2 - b1, a2 - b1);
    if (((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0))) return 0.0;
    double best = point_segment_distance(a1, b1, b2);
    best = std::min(best, point_segment_distance(a2, b1, b2));
    best = std::min(best, point_segment_distance(b1, a1, a2));
    best = std::min(best, point_segment_distance(b2, a1, a2));
    return best;
}

// Signed core distance of a segment against a polygon: negative if they
// intersect or an endpoint lies inside, else the minimal feature distance.
double segment_polygon_distance(const Vec2& a, const Vec2& b, const ConvexPolygon& poly) {
    if (point_in_polygon(poly, a) || point_in_polygon(poly, b)) return -1.0;
    double best = std::numeric_limits<double>::infinity();
    size_t n = poly.vertices.size();
    for (size_t i = 0; i < n; ++i) {
        double d = segment_segment_distance(a, b, poly.vertices[i],
                                            poly.vertices[(i + 1) % n]);
        if (d == 0.0) return -1.0;  // edge crossing
        best = std::min(best, d);
    }
    return best;
}

bool polygons_overlap(const ConvexPolygon& p, const ConvexPolygon& q) {
    // Separating-axis test over both polygons' edge normals.
    auto separated_by = [](const ConvexPolygon& edges_of, const ConvexPolygon& other) {
        size_t n = edges_of.vertices.size();
        for (size_t i = 0; i < n; ++i) {
            Vec2 e = edges_of.vertices[(i + 1) % n] - edges_of.vertices[i];
            Vec2 axis(-e.y(), e.x());  // outward-left normal of CCW edge... sign irrelevant
            double min_p = std::numeric_limits<double>::infinity(), max_p = -min_p;
            double min_q = min_p, max_q = -min_p;
            for (const Vec2& v : edges_of.vertices) {
                double t = axis.dot(v);
                min_p = std::min(min_p, t);
                max_p = std::max(max_p, t);
            }
            for (const Vec2& v : other.vertices) {
                double t = axis.dot(v);
                min_q = std::min(min_q, t);
                max_q = std::max(max_q, t);
            }
            if (max_p < min_q || max_q < min_p) return true;
        }
        return false;
    };
    return !separated_by(p, q) && !separated_by(q, p);
}

double polygon_polygon_distance(const ConvexPolygon& p, const ConvexPolygon& q) {
    if (polygons_overlap(p, q)) return -1.0;
    double best = std::numeric_limits<double>::infinity();
    size_t np = p.vertices.size(), nq = q.vertices.size();
    for (size_t i = 0; i < np; ++i)
        for (size_t j = 0; j < nq; ++j)
            best = std::min(best, segment_segment_distance(p.vertices[i],
                                                           p.vertices[(i + 1) % np],
                                                           q.vertices[j],
                                                           q.vertices[(j + 1) % nq]));
    return best;
}

// Core decomposition: every shape is a point/segment/polygon grown by a radius.
struct Core {
    enum Kind { Point, Segment, Poly } kind;
    Vec2 a, b;
    const ConvexPolygon* poly = nullptr;
    double radius = 0.0;
};

Core core_of(const Obstacle& o) {
    if (const Disk* d = std::get_if<Disk>(&o.shape))
        return Core{Core::Point, d->center, d->center, nullptr, d->radius};
    if (const Capsule* c = std::get_if<Capsule>(&o.shape))
        return Core{Core::Segment, c->a, c->b, nullptr, c->radius};
    return Core{Core::Poly, Vec2(), Vec2(), &std::get<ConvexPolygon>(o.shape), 0.0};
}

double core_distance(const Core& x, const Core& y) {
    if (x.kind == Core::Poly && y.kind == Core::Poly)
        return polygon_polygon_distance(*x.poly, *y.poly);
    if (x.kind == Core::Poly) return core_distance(y, x);
    // x is point or segment now.
    if (y.kind == Core::Poly) {
        if (x.kind == Core::Point) {
            if (point_in_polygon(*y.poly, x.a)) return -1.0;
            return polygon_boundary_distance(*y.poly, x.a);
        }
        return segment_polygon_distance(x.a, x.b, *y.poly);
    }
    if (x.kind == Core::Point && y.kind == Core::Point) return (x.a - y.a).norm();
    if (x.kind == Core::Point) return point_segment_distance(x.a, y.a, y.b);
    if (y.kind == Core::Point) return point_segment_distance(y.a, x.a, x.b);
    return segment_segment_distance(x.a, x.b, y.a, y.b);
}

Vec2 core_closest_point_to(const Core& c, const Vec2& p) {
    switch (c.kind) {
        case Core::Point:
            return c.a;
        case Core::Segment:
            return closest_point_on_segment(p, c.a, c.b);
        case Core::Poly: {
            if (point_in_polygon(*c.poly, p)) return p;
            double best = std::numeric_limits<double>::infinity();
            Vec2 arg = c.poly->vertices.front();
            size_t n = c.poly->vertices.size();
            for (size_t i = 0; i < n; ++i) {
                Vec2 q = closest_point_on_segment(p, c.poly->vertices[i],
                                                  c.poly->vertices[(i + 1) % n]);
                double d = (q - p).norm();
                if (d < best) {
                    best = d;
                    arg = q;
                }
            }
            return arg;
        }
    }
    return c.a;
}

}  // namespace

void validate_obstacle(const Obstacle& o, double eps) {
    if (o.id < 0) throw std::invalid_argument("obstacle id must be non-negative");
    if (o.mode == BoundaryMode::Partial && !o.is_disk())
        throw std::invalid_argument("partial boundary mode is restricted to disks");
    if (const Disk* d = std::get_if<Disk>(&o.shape)) {
        if (!(d->radius > eps)) throw std::invalid_argument("disk radius must be positive");
        return;
    }
    if (const Capsule* c = std::get_if<Capsule>(&o.shape)) {
        if (!(c->radius > eps))
            throw std::invalid_argument("capsule radius must be positive");
        if ((c->a - c->b).norm() <= eps)
            throw std::invalid_argument("capsule endpoints must be distinct");
        return;
    }
    const ConvexPolygon& poly = std::get<ConvexPolygon>(o.shape);
    size_t n = poly.vertices.size();
    if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");
    for (size_t i = 0; i < n; ++i) {
        const Vec2& a = poly.vertices[i];
        const Vec2& b = poly.vertices[(i + 1) % n];
        const Vec2& c = poly.vertices[(i + 2) % n];
        double turn = cross2(b - a, c - b);
        double scale = (b - a).norm() * (c - b).norm();
        if (turn <= eps * std::max(1.0, scale))
            throw std::invalid_argument(
                "polygon must be counterclockwise and strictly convex "
                "(no three collinear vertices)");
    }
}

double signed_distance(const Obstacle& o, const Vec2& p) {
    if (const Disk* d = std::get_if<Disk>(&o.shape)) return (p - d->center).norm() - d->radius;
    if (const Capsule* c = std::get_if<Capsule>(&o.shape))
        return point_segment_distance(p, c->a, c->b) - c->radius;
    const ConvexPolygon& poly = std::get<ConvexPolygon>(o.shape);
    double bd = polygon_boundary_distance(poly, p);
    return point_in_polygon(poly, p) ? -bd : bd;
}

bool boundary_member(const Obstacle& o, const Vec2& p, double eps_angle) {
    switch (o.mode) {
        case BoundaryMode::Closed:
            return true;
        case BoundaryMode::Open:
            return false;
        case BoundaryMode::Partial: {
            const Disk& d = std::get<Disk>(o.shape);
            return arcset_contains_direction(o.included, direction_of(p - d.center),
                                             eps_angle);
        }
    }
    return false;
}

bool contains_point(const Obstacle& o, const Vec2& p, double eps_space, double eps_angle) {
    double sd = signed_distance(o, p);
    if (sd < -eps_space) return true;
    if (sd <= eps_space) return boundary_member(o, p, eps_angle);
    return false;
}

Vec2 support_point(const Obstacle& o, const Vec2& u) {
    if (const Disk* d = std::get_if<Disk>(&o.shape)) return d->center + d->radius * u;
    if (const Capsule* c = std::get_if<Capsule>(&o.shape)) {
        const Vec2& end = (u.dot(c->b - c->a) >= 0.0) ? c->b : c->a;
        return end + c->radius * u;
    }
    const ConvexPolygon& poly = std::get<ConvexPolygon>(o.shape);
    const Vec2* best = &poly.vertices.front();
    double best_t = u.dot(*best);
    for (const Vec2& v : poly.vertices) {
        double t = u.dot(v);
        if (t > best_t) {
            best_t = t;
            best = &v;
        }
    }
    return *best;
}

BBox obstacle_bbox(const Obstacle& o) {
    BBox box;
    if (const Disk* d = std::get_if<Disk>(&o.shape)) {
        box.lo = d->center - Vec2(d->radius, d->radius);
        box.hi = d->center + Vec2(d->radius, d->radius);
        return box;
    }
    if (const Capsule* c = std::get_if<Capsule>(&o.shape)) {
        Vec2 r(c->radius, c->radius);
        box.lo = (c->a - r).cwiseMin(c->b - r);
        box.hi = (c->a + r).cwiseMax(c->b + r);
        return box;
    }
    const ConvexPolygon& poly = std::get<ConvexPolygon>(o.shape);
    box.lo = box.hi = poly.vertices.front();
    for (const Vec2& v : poly.vertices) box.expand(v);
    return box;
}

double obstacle_separation(const Obstacle& a, const Obstacle& b) {
    Core ca = core_of(a), cb = core_of(b);
    return core_distance(ca, cb) - (ca.radius + cb.radius);
}

std::pair<Vec2, Vec2> closest_points(const Obstacle& a, const Obstacle& b) {
    Core ca = core_of(a), cb = core_of(b);
    // Alternate projections between the cores; convexity makes this converge
    // fast, and touching pairs (the case that matters) converge immediately.
    Vec2 pa = (ca.kind == Core::Poly) ? ca.poly->vertices.front() : ca.a;
    Vec2 pb = core_closest_point_to(cb, pa);
    for (int it = 0; it < 32; ++it) {
        Vec2 npa = core_closest_point_to(ca, pb);
        Vec2 npb = core_closest_point_to(cb, npa);
        if ((npa - pa).norm() < 1e-12 && (npb - pb).norm() < 1e-12) {
            pa = npa;
            pb = npb;
            break;
        }
        pa = npa;
        pb = npb;
    }
    // Offset core points to the actual surfaces along the connecting line.
    Vec2 dirab = pb - pa;
    double len = dirab.norm();
    Vec2 u = (len > 0.0) ? Vec2(dirab / len) : Vec2(1.0, 0.0);
    return {pa + ca.radius * u, pb - cb.radius * u};
}

std::pair<double, double> footprint_extreme_directions(const Obstacle& o, const Vec2& x) {
    if (signed_distance(o, x) <= 0.0)
        throw std::invalid_argument("footprint extremes need an exterior viewpoint");
    if (const Disk* d = std::get_if<Disk>(&o.shape)) {
        double dist = (d->center - x).norm();
        double psi = direction_of(d->center - x);
        double alpha = std::asin(std::min(1.0, d->radius / dist));
        return {normalize_angle(psi - alpha), normalize_angle(psi + alpha)};
    }
    // Polygon and capsule: unwrap candidate directions around a direction to
    // an interior reference point; the footprint is narrower than pi, so the
    // unwrapped offsets are free of wrap-around.
    auto hull_of = [&x](const std::vector<double>& dirs, const Vec2& ref_point) {
        double ref = direction_of(ref_point - x);
        double lo = kTwoPi, hi = -kTwoPi;
        for (double th : dirs) {
            double delta = wrap_to_pi(th - ref);
            lo = std::min(lo, delta);
            hi = std::max(hi, delta);
        }
        return std::pair<double, double>{normalize_angle(ref + lo), normalize_angle(ref + hi)};
    };
    if (const Capsule* c = std::get_if<Capsule>(&o.shape)) {
        std::vector<double> dirs;
        for (const Vec2& end : {c->a, c->b}) {
            double dist = (end - x).norm();
            double psi = direction_of(end - x);
            double alpha = std::asin(std::min(1.0, c->radius / dist));
            dirs.push_back(psi - alpha);
            dirs.push_back(psi + alpha);
        }
        return hull_of(dirs, 0.5 * (c->a + c->b));
    }
    const ConvexPolygon& poly = std::get<ConvexPolygon>(o.shape);
    std::vector<double> dirs;
    Vec2 centroid(0.0, 0.0);
    for (const Vec2& v : poly.vertices) {
        dirs.push_back(direction_of(v - x));
        centroid += v;
    }
    centroid /= static_cast<double>(poly.vertices.size());
    return hull_of(dirs, centroid);
}

BBox Scene::bbox() const {
    if (obstacles.empty()) return BBox{Vec2(-1.0, -1.0), Vec2(1.0, 1.0)};
    BBox box = obstacle_bbox(obstacles.front());
    for (const Obstacle& o : obstacles) {
        BBox ob = obstacle_bbox(o);
        box.expand(ob.lo);
        box.expand(ob.hi);
    }
    double pad = 0.10 * std::max(box.width(), box.height());
    if (pad <= 0.0) pad = 0.1;
    box.lo -= Vec2(pad, pad);
    box.hi += Vec2(pad, pad);
    return box;
}

void validate_scene(const Scene& s) {
    if (!(s.eps_angle > 0.0) || !(s.eps_space > 0.0))
        throw std::invalid_argument("scene tolerances must be positive");
    std::set<int> ids;
    for (const Obstacle& o : s.obstacles) {
        validate_obstacle(o, s.eps_space);
        if (!ids.insert(o.id).second)
            throw std::invalid_argument("duplicate obstacle id " + std::to_string(o.id));
    }
}

}  // namespace semiconvex
