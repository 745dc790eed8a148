#include "semiconvex/raycast.hpp"

#include <algorithm>
#include <limits>

namespace semiconvex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kParallelTol = 1e-12;  // |unit x unit| below this is parallel

struct LineInterval {
    double lo = kInf, hi = -kInf;
    bool valid() const { return lo <= hi; }
};

// Contact interval of the full line origin + t*dir with a disk's closure.
LineInterval line_disk_interval(const Vec2& origin, const Vec2& dir, const Vec2& center,
                                double radius) {
    Vec2 m = center - origin;
    double proj = dir.dot(m);
    double perp2 = m.squaredNorm() - proj * proj;
    double h2 = radius * radius - perp2;
    if (h2 < 0.0) return {};
    double h = std::sqrt(std::max(0.0, h2));
    return LineInterval{proj - h, proj + h};
}

struct ClipResult {
    LineInterval t;
    bool on_flat = false;  // the line rides one of the clip edges
    bool empty = false;
};

// Clips the line against half-planes n_i . (p - a_i) <= 0 with unit n_i.
ClipResult clip_halfplanes(const Vec2& origin, const Vec2& dir,
                           const Vec2* pts, const Vec2* normals, int count,
                           double eps_space) {
    ClipResult res;
    res.t = LineInterval{-kInf, kInf};
    for (int i = 0; i < count; ++i) {
        double denom = normals[i].dot(dir);
        double num = normals[i].dot(pts[i] - origin);
        if (std::abs(denom) <= kParallelTol) {
            if (num < -eps_space) {
                res.empty = true;
                return res;
            }
            if (num <= eps_space) res.on_flat = true;
            continue;
        }
        double bound = num / denom;
        if (denom > 0.0)
            res.t.hi = std::min(res.t.hi, bound);
        else
            res.t.lo = std::max(res.t.lo, bound);
    }
    if (!res.t.valid()) {
        // A ray through a vertex can clip to an interval that is empty by a
        // rounding hair; keep it as a degenerate graze parameter.
        if (res.t.lo - res.t.hi <= eps_space * (1.0 + std::abs(res.t.lo))) {
            double mid = 0.5 * (res.t.lo + res.t.hi);
            res.t = LineInterval{mid, mid};
        } else {
            res.empty = true;
        }
    }
    return res;
}

RayContact classify(const Ray& r, const Obstacle& o, LineInterval iv, bool boundary_only,
                    double eps_space, double eps_angle) {
    RayContact rc;
    if (!iv.valid() || iv.hi <= eps_space) return rc;  // behind or at the origin
    double width = iv.hi - iv.lo;
    bool graze = boundary_only || width <= eps_space * (1.0 + std::abs(iv.hi));
    double t_touch;
    if (graze && !boundary_only) {
        t_touch = std::max(0.5 * (iv.lo + iv.hi), eps_space);
    } else {
        t_touch = (iv.lo > eps_space) ? iv.lo : iv.hi;
    }
    rc.kind = graze ? RayContact::Kind::graze : RayContact::Kind::cross;
    rc.t_touch = t_touch;
    rc.t_exit = iv.hi;
    rc.touch_point = r.at(t_touch);
    if (graze) rc.boundary_member_hit = boundary_member(o, rc.touch_point, eps_angle);
    return rc;
}

}  // namespace

RayContact ray_contact(const Ray& r, const Obstacle& o, double eps_space, double eps_angle) {
    Vec2 dir = r.dir();
    if (const Disk* d = std::get_if<Disk>(&o.shape)) {
        Vec2 m = d->center - r.origin;
        double proj = dir.dot(m);
        double perp = std::abs(cross2(dir, m));
        if (perp >= d->radius + eps_space) return RayContact{};
        if (perp >= d->radius - eps_space) {
            // Tangent line: single boundary contact at the foot of the center.
            if (proj <= eps_space) return RayContact{};
            LineInterval iv{proj, proj};
            return classify(r, o, iv, true, eps_space, eps_angle);
        }
        return classify(r, o, line_disk_interval(r.origin, dir, d->center, d->radius),
                        false, eps_space, eps_angle);
    }
    if (const ConvexPolygon* poly = std::get_if<ConvexPolygon>(&o.shape)) {
        size_t n = poly->vertices.size();
        std::vector<Vec2> pts(n), normals(n);
        for (size_t i = 0; i < n; ++i) {
            Vec2 e = poly->vertices[(i + 1) % n] - poly->vertices[i];
            pts[i] = poly->vertices[i];
            normals[i] = Vec2(e.y(), -e.x()).normalized();  // outward for CCW
        }
        ClipResult cr = clip_halfplanes(r.origin, dir, pts.data(), normals.data(),
                                        static_cast<int>(n), eps_space);
        if (cr.empty) return RayContact{};
        return classify(r, o, cr.t, cr.on_flat, eps_space, eps_angle);
    }
    const Capsule& c = std::get<Capsule>(o.shape);
    // End caps follow the disk tangency rule: a line within eps of grazing
    // contributes a single boundary contact at the cap center's foot, never a
    // hair-thin chord (which classify() would otherwise read as a crossing).
    auto cap_interval = [&](const Vec2& center) -> LineInterval {
        Vec2 m = center - r.origin;
        double proj = dir.dot(m);
        double perp = std::abs(cross2(dir, m));
        if (perp >= c.radius + eps_space) return {};
        if (perp >= c.radius - eps_space) {
            if (proj <= eps_space) return {};
            return LineInterval{proj, proj};
        }
        return line_disk_interval(r.origin, dir, center, c.radius);
    };
    LineInterval iv_a = cap_interval(c.a);
    LineInterval iv_b = cap_interval(c.b);
    Vec2 axis = (c.b - c.a).normalized();
    Vec2 nrm(-axis.y(), axis.x());
    Vec2 rect_pts[4] = {c.a + c.radius * nrm, c.a - c.radius * nrm, c.a, c.b};
    Vec2 rect_normals[4] = {nrm, -nrm, -axis, axis};
    ClipResult rect = clip_halfplanes(r.origin, dir, rect_pts, rect_normals, 4, eps_space);

    LineInterval iv;
    bool any = false;
    auto merge = [&](const LineInterval& piece) {
        if (!piece.valid()) return;
        iv.lo = any ? std::min(iv.lo, piece.lo) : piece.lo;
        iv.hi = any ? std::max(iv.hi, piece.hi) : piece.hi;
        any = true;
    };
    merge(iv_a);
    merge(iv_b);
    if (!rect.empty) merge(rect.t);
    if (!any) return RayContact{};

    // Boundary-only contact happens exactly when the ray rides one of the two
    // straight sides: parallel to the axis at offset ~radius.
    bool on_side = false;
    if (std::abs(cross2(dir, axis)) <= kParallelTol) {
        double off = std::abs(nrm.dot(r.origin - c.a));
        on_side = std::abs(off - c.radius) <= eps_space;
    }
    return classify(r, o, iv, on_side, eps_space, eps_angle);
}

HitResult ray_hits_obstacle(const Ray& r, const Obstacle& o, double eps_space,
                            double eps_angle) {
    RayContact rc = ray_contact(r, o, eps_space, eps_angle);
    HitResult h;
    if (rc.kind == RayContact::Kind::miss) return h;
    if (rc.kind == RayContact::Kind::graze && !rc.boundary_member_hit) return h;
    h.hit = true;
    h.t_first = rc.t_touch;
    h.point = r.at(rc.t_touch);
    h.obstacle_id = o.id;
    return h;
}

HitResult first_hit(const Scene& s, const Ray& r) {
    HitResult best;
    for (const Obstacle& o : s.obstacles) {
        HitResult h = ray_hits_obstacle(r, o, s.eps_space, s.eps_angle);
        if (!h.hit) continue;
        if (!best.hit || h.t_first < best.t_first - s.eps_space ||
            (std::abs(h.t_first - best.t_first) <= s.eps_space &&
             h.obstacle_id < best.obstacle_id)) {
            best = h;
        }
    }
    return best;
}

bool any_hit(const Scene& s, const Ray& r) {
    for (const Obstacle& o : s.obstacles)
        if (ray_hits_obstacle(r, o, s.eps_space, s.eps_angle).hit) return true;
    return false;
}

bool oracle_shadowed(const Scene& s, const Vec2& x, int n_dirs) {
    if (n_dirs < 4) throw std::invalid_argument("oracle_shadowed: n_dirs must be >= 4");
    for (const Obstacle& o : s.obstacles)
        if (signed_distance(o, x) < -s.eps_space)
            throw std::invalid_argument(
                "oracle_shadowed: query point inside an obstacle closure");

    Ray r{x, 0.0};
    for (const Obstacle& o : s.obstacles) {
        if (signed_distance(o, x) <= s.eps_space) continue;  // boundary: no tangents
        auto [lo, hi] = footprint_extreme_directions(o, x);
        r.angle = lo;
        if (!any_hit(s, r)) return false;
        r.angle = hi;
        if (!any_hit(s, r)) return false;
    }
    double step = kTwoPi / n_dirs;
    for (int k = 0; k < n_dirs; ++k) {
        r.angle = k * step;
        if (!any_hit(s, r)) return false;
    }
    return true;
}

}  // namespace semiconvex
