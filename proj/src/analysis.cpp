#include "semiconvex/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>

#include "semiconvex/raycast.hpp"

namespace semiconvex {

namespace {

Vec2 perp(const Vec2& v) { return Vec2{-v.y(), v.x()}; }

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = i;
    }
    size_t find(size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

// Do the two obstacles belong to one connected component of the union?
// Overlapping interiors always join; touching closures join only when a touch
// point is a member of at least one of them.
bool connected_pair(const Scene& s, const Obstacle& a, const Obstacle& b) {
    double sep = obstacle_separation(a, b);
    if (sep < -s.eps_space) return true;
    if (sep > s.eps_space) return false;
    auto [pa, pb] = closest_points(a, b);
    return boundary_member(a, pa, s.eps_angle) || boundary_member(b, pb, s.eps_angle);
}

bool smooth_shape(const Obstacle& o) { return o.is_disk() || o.is_capsule(); }

// ---- critical boundary points -------------------------------------------

struct CircleFeature {
    Vec2 center;
    double radius;
};

void circle_features(const Obstacle& o, std::vector<CircleFeature>& out) {
    if (const Disk* d = std::get_if<Disk>(&o.shape)) {
        out.push_back({d->center, d->radius});
    } else if (const Capsule* c = std::get_if<Capsule>(&o.shape)) {
        out.push_back({c->a, c->radius});
        out.push_back({c->b, c->radius});
    }
}

void point_features(const Obstacle& o, std::vector<Vec2>& out) {
    if (const ConvexPolygon* p = std::get_if<ConvexPolygon>(&o.shape)) {
        out.insert(out.end(), p->vertices.begin(), p->vertices.end());
    }
}

// Does the whole closure of o lie in one closed half-plane of the line
// through q with unit normal n?
bool one_sided(const Obstacle& o, const Vec2& q, const Vec2& n, double tol) {
    double c = n.dot(q);
    double hi = n.dot(support_point(o, n));
    if (hi <= c + tol) return true;
    double lo = n.dot(support_point(o, -n));
    return lo >= c - tol;
}

// Contact points (one on each obstacle) of common tangent lines between the
// smooth features of a and the features of b. Lines that fail to support both
// obstacles (e.g. a cap-circle tangent crossing the other capsule's body) are
// rejected.
void tangent_contacts(const Obstacle& a, const Obstacle& b, double tol,
                      std::vector<std::pair<Vec2, Vec2>>& out) {
    std::vector<CircleFeature> ca, cb;
    circle_features(a, ca);
    circle_features(b, cb);
    std::vector<Vec2> pa, pb;
    point_features(a, pa);
    point_features(b, pb);

    auto consider = [&](const Vec2& qa, const Vec2& qb, const Vec2& n) {
        if (one_sided(a, qa, n, tol) && one_sided(b, qb, n, tol)) out.emplace_back(qa, qb);
    };

    for (const CircleFeature& f : ca) {
        for (const CircleFeature& g : cb) {
            Vec2 delta = g.center - f.center;
            double d = delta.norm();
            if (d <= tol) continue;
            Vec2 u = delta / d, v = perp(u);
            // Same-side tangents solve n.(g-f) = r2 - r1; opposite-side ones
            // solve n.(g-f) = -(r1 + r2) and flip g's contact offset.
            for (int variant = 0; variant < 2; ++variant) {
                bool same_side = variant == 0;
                double k = same_side ? (g.radius - f.radius) / d
                                     : -(f.radius + g.radius) / d;
                if (std::abs(k) > 1.0) continue;
                double m = std::sqrt(std::max(0.0, 1.0 - k * k));
                for (double sgn : {1.0, -1.0}) {
                    Vec2 n = k * u + sgn * m * v;
                    Vec2 qa = f.center - f.radius * n;
                    Vec2 qb = same_side ? Vec2(g.center - g.radius * n)
                                        : Vec2(g.center + g.radius * n);
                    consider(qa, qb, n);
                }
            }
        }
    }
    auto point_circle = [&](const Vec2& p, const CircleFeature& f, bool p_is_a) {
        Vec2 w = p - f.center;
        double d = w.norm();
        if (d < f.radius - tol || d <= tol) return;
        double bc = std::min(1.0, f.radius / d);
        double bs = std::sqrt(std::max(0.0, 1.0 - bc * bc));
        Vec2 wu = w / d, wv = perp(wu);
        for (double sgn : {1.0, -1.0}) {
            Vec2 t = f.center + f.radius * (bc * wu + sgn * bs * wv);
            Vec2 line = t - p;
            if (line.norm() <= tol) continue;
            Vec2 n = perp(line.normalized());
            if (p_is_a)
                consider(p, t, n);
            else
                consider(t, p, n);
        }
    };
    for (const Vec2& p : pa)
        for (const CircleFeature& g : cb) point_circle(p, g, true);
    for (const Vec2& p : pb)
        for (const CircleFeature& f : ca) point_circle(p, f, false);
    // Vertex-vertex support lines touch the polygons at vertices, which are
    // already injected as critical samples on their own.
}

Vec2 disk_boundary_point(const Disk& d, double theta) {
    return d.center + d.radius * unit_vector(theta);
}

void uniform_boundary_points(const Obstacle& o, int n, std::vector<Vec2>& out) {
    if (const Disk* d = std::get_if<Disk>(&o.shape)) {
        for (int k = 0; k < n; ++k) out.push_back(disk_boundary_point(*d, kTwoPi * k / n));
        return;
    }
    if (const ConvexPolygon* p = std::get_if<ConvexPolygon>(&o.shape)) {
        size_t m = p->vertices.size();
        std::vector<double> cum(m + 1, 0.0);
        for (size_t i = 0; i < m; ++i)
            cum[i + 1] = cum[i] + (p->vertices[(i + 1) % m] - p->vertices[i]).norm();
        double total = cum[m];
        size_t edge = 0;
        for (int k = 0; k < n; ++k) {
            double t = total * k / n;
            while (edge + 1 < m && cum[edge + 1] <= t) ++edge;
            double local = (t - cum[edge]) / (cum[edge + 1] - cum[edge]);
            const Vec2& u = p->vertices[edge];
            const Vec2& v = p->vertices[(edge + 1) % m];
            out.push_back(u + local * (v - u));
        }
        return;
    }
    const Capsule& c = std::get<Capsule>(o.shape);
    Vec2 u = (c.b - c.a).normalized();
    Vec2 nrm = perp(u);
    double len = (c.b - c.a).norm();
    double total = 2 * len + kTwoPi * c.radius;
    for (int k = 0; k < n; ++k) {
        double t = total * k / n;
        if (t < len) {
            out.push_back(c.a + c.radius * nrm + t * u);
        } else if ((t -= len) < kPi * c.radius) {
            double phi = t / c.radius;
            out.push_back(c.b + c.radius * (std::cos(phi) * nrm + std::sin(phi) * u));
        } else if ((t -= kPi * c.radius) < len) {
            out.push_back(c.b - c.radius * nrm - t * u);
        } else {
            t -= len;
            double phi = t / c.radius;
            out.push_back(c.a - c.radius * (std::cos(phi) * nrm + std::sin(phi) * u));
        }
    }
}

void critical_boundary_points(const Obstacle& o, double /*eps*/, std::vector<Vec2>& out) {
    if (const ConvexPolygon* p = std::get_if<ConvexPolygon>(&o.shape)) {
        out.insert(out.end(), p->vertices.begin(), p->vertices.end());
    }
    for (const Vec2& dir : {Vec2{1, 0}, Vec2{-1, 0}, Vec2{0, 1}, Vec2{0, -1}})
        out.push_back(support_point(o, dir));
    if (o.mode == BoundaryMode::Partial) {
        const Disk& d = std::get<Disk>(o.shape);
        for (const Arc& a : o.included) {
            out.push_back(disk_boundary_point(d, a.start));
            if (a.width > 0.0) out.push_back(disk_boundary_point(d, a.end()));
        }
    }
}

// ---- ring detection -------------------------------------------------------

// A component group whose intra-group contact graph has a cycle may enclose
// exterior area (think a necklace of disks). Simple connectivity of the union
// is then not guaranteed by convexity alone.
bool group_has_cycle(const Scene& s, const std::vector<std::vector<size_t>>& groups) {
    for (const auto& g : groups) {
        if (g.size() < 3) continue;
        size_t edges = 0;
        for (size_t i = 0; i < g.size(); ++i)
            for (size_t j = i + 1; j < g.size(); ++j)
                if (connected_pair(s, s.obstacles[g[i]], s.obstacles[g[j]])) ++edges;
        if (edges >= g.size()) return true;
    }
    return false;
}

// Exterior cells unreachable from the raster border by 4-connected steps over
// non-occupied cells: the hallmark of an enclosing union.
bool has_enclosed_exterior(const ShadowRaster& r) {
    std::vector<char> seen(r.cells.size(), 0);
    std::deque<std::pair<int, int>> queue;
    auto push = [&](int ix, int iy) {
        if (ix < 0 || iy < 0 || ix >= r.nx || iy >= r.ny) return;
        int i = r.index(ix, iy);
        if (seen[static_cast<size_t>(i)] || r.cells[static_cast<size_t>(i)] == CellClass::occupied)
            return;
        seen[static_cast<size_t>(i)] = 1;
        queue.emplace_back(ix, iy);
    };
    for (int ix = 0; ix < r.nx; ++ix) {
        push(ix, 0);
        push(ix, r.ny - 1);
    }
    for (int iy = 0; iy < r.ny; ++iy) {
        push(0, iy);
        push(r.nx - 1, iy);
    }
    while (!queue.empty()) {
        auto [ix, iy] = queue.front();
        queue.pop_front();
        push(ix + 1, iy);
        push(ix - 1, iy);
        push(ix, iy + 1);
        push(ix, iy - 1);
    }
    for (size_t i = 0; i < r.cells.size(); ++i)
        if (r.cells[i] != CellClass::occupied && !seen[i]) return true;
    return false;
}

std::string format_int(long long v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%lld", v);
    return buf;
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

}  // namespace

ComponentPartition components(const Scene& s) {
    size_t n = s.obstacles.size();
    UnionFind uf(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (connected_pair(s, s.obstacles[i], s.obstacles[j])) uf.unite(i, j);

    std::map<size_t, std::vector<size_t>> by_root;
    for (size_t i = 0; i < n; ++i) by_root[uf.find(i)].push_back(i);

    ComponentPartition part;
    part.component_of.assign(n, 0);
    std::vector<std::vector<size_t>> groups;
    groups.reserve(by_root.size());
    for (auto& [root, members] : by_root) groups.push_back(std::move(members));
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (size_t g = 0; g < groups.size(); ++g) {
        for (size_t idx : groups[g]) part.component_of[idx] = g;
        part.smooth.push_back(groups[g].size() == 1 && smooth_shape(s.obstacles[groups[g][0]]));
    }
    part.groups = std::move(groups);
    return part;
}

std::vector<BoundarySample> boundary_samples(const Scene& s, int n_per_obstacle,
                                             bool include_critical) {
    ComponentPartition part = components(s);
    int n = std::max(8, n_per_obstacle);
    double tol = s.eps_space * (1.0 + s.bbox().diagonal());

    std::vector<BoundarySample> out;
    auto add = [&](const Vec2& p, size_t owner, bool critical) {
        for (size_t j = 0; j < s.obstacles.size(); ++j) {
            if (j == owner) continue;
            if (signed_distance(s.obstacles[j], p) < -s.eps_space) return;
        }
        out.push_back(BoundarySample{p, owner, part.component_of[owner], critical});
    };

    for (size_t i = 0; i < s.obstacles.size(); ++i) {
        std::vector<Vec2> pts;
        uniform_boundary_points(s.obstacles[i], n, pts);
        for (const Vec2& p : pts) add(p, i, false);
    }
    if (!include_critical) return out;

    for (size_t i = 0; i < s.obstacles.size(); ++i) {
        std::vector<Vec2> pts;
        critical_boundary_points(s.obstacles[i], s.eps_space, pts);
        for (const Vec2& p : pts) add(p, i, true);
    }
    for (size_t i = 0; i < s.obstacles.size(); ++i) {
        for (size_t j = i + 1; j < s.obstacles.size(); ++j) {
            const Obstacle &a = s.obstacles[i], &b = s.obstacles[j];
            if (std::abs(obstacle_separation(a, b)) <= s.eps_space) {
                auto [pa, pb] = closest_points(a, b);
                add(pa, i, true);
                add(pb, j, true);
            }
            std::vector<std::pair<Vec2, Vec2>> contacts;
            tangent_contacts(a, b, tol, contacts);
            for (const auto& [qa, qb] : contacts) {
                add(qa, i, true);
                add(qb, j, true);
            }
        }
    }
    return out;
}

WeakReport weak_semiconvexity_report(const Scene& s, int n_per_obstacle,
                                     bool include_critical) {
    WeakReport rep;
    rep.critical_included = include_critical;
    std::vector<BoundarySample> samples = boundary_samples(s, n_per_obstacle, include_critical);
    rep.tested = static_cast<int>(samples.size());
    for (const BoundarySample& sample : samples) {
        Verdict v = is_semiconvex_at(s, sample.point);
        if (v.shadowed) {
            rep.pass = false;
            rep.failures.push_back(sample);
        }
    }
    return rep;
}

ShadowRaster shadow_scan(const Scene& s, double resolution) {
    if (!(resolution > 0.0)) throw std::invalid_argument("shadow_scan: resolution must be > 0");
    ShadowRaster r;
    r.box = s.bbox();
    r.resolution = resolution;
    r.nx = std::max(1, static_cast<int>(std::ceil(r.box.width() / resolution)));
    r.ny = std::max(1, static_cast<int>(std::ceil(r.box.height() / resolution)));
    r.cells.assign(static_cast<size_t>(r.nx) * r.ny, CellClass::free);

    for (int iy = 0; iy < r.ny; ++iy) {
        for (int ix = 0; ix < r.nx; ++ix) {
            Vec2 p = r.cell_center(ix, iy);
            bool covered = false;
            for (const Obstacle& o : s.obstacles) {
                if (signed_distance(o, p) <= s.eps_space) {
                    covered = true;
                    break;
                }
            }
            CellClass c;
            if (covered) {
                c = CellClass::occupied;
            } else if (is_semiconvex_at(s, p).shadowed) {
                c = CellClass::shadowed;
                ++r.shadow_cell_count;
            } else {
                c = CellClass::free;
            }
            r.cells[static_cast<size_t>(r.index(ix, iy))] = c;
        }
    }

    // Label 8-connected shadowed regions.
    std::vector<char> seen(r.cells.size(), 0);
    for (int iy = 0; iy < r.ny; ++iy) {
        for (int ix = 0; ix < r.nx; ++ix) {
            size_t i = static_cast<size_t>(r.index(ix, iy));
            if (seen[i] || r.cells[i] != CellClass::shadowed) continue;
            ++r.shadow_component_count;
            std::deque<std::pair<int, int>> queue{{ix, iy}};
            seen[i] = 1;
            while (!queue.empty()) {
                auto [cx, cy] = queue.front();
                queue.pop_front();
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        int nx = cx + dx, ny = cy + dy;
                        if (nx < 0 || ny < 0 || nx >= r.nx || ny >= r.ny) continue;
                        size_t k = static_cast<size_t>(r.index(nx, ny));
                        if (!seen[k] && r.cells[k] == CellClass::shadowed) {
                            seen[k] = 1;
                            queue.emplace_back(nx, ny);
                        }
                    }
                }
            }
        }
    }
    return r;
}

std::vector<SupportRay> supporting_rays(const Scene& s, const Vec2& x) {
    for (const Obstacle& o : s.obstacles) {
        if (signed_distance(o, x) <= s.eps_space)
            throw std::invalid_argument(
                "supporting_rays: point must be strictly outside every obstacle closure");
    }
    ComponentPartition part = components(s);

    struct Candidate {
        double angle;
        int id;
    };
    std::vector<Candidate> cands;
    for (const Obstacle& o : s.obstacles) {
        auto [lo, hi] = footprint_extreme_directions(o, x);
        cands.push_back({normalize_angle(lo), o.id});
        cands.push_back({normalize_angle(hi), o.id});
    }
    std::sort(cands.begin(), cands.end(), [](const Candidate& a, const Candidate& b) {
        if (a.angle != b.angle) return a.angle < b.angle;
        return a.id < b.id;
    });
    // Deduplicate within eps_angle keeping the lowest id, then lowest angle.
    std::vector<Candidate> kept;
    for (const Candidate& c : cands) {
        if (!kept.empty() && c.angle - kept.back().angle <= s.eps_angle) {
            if (c.id < kept.back().id) kept.back().id = c.id;
            continue;
        }
        kept.push_back(c);
    }
    if (kept.size() >= 2 && kTwoPi - kept.back().angle + kept.front().angle <= s.eps_angle)
        kept.pop_back();  // first and last coincide across the cut

    std::vector<SupportRay> out;
    for (const Candidate& cand : kept) {
        Ray ray{x, cand.angle};
        std::vector<RayContact> contacts(s.obstacles.size());
        double t_min = std::numeric_limits<double>::infinity();
        for (size_t k = 0; k < s.obstacles.size(); ++k) {
            contacts[k] = ray_contact(ray, s.obstacles[k], s.eps_space);
            if (contacts[k].kind != RayContact::Kind::miss)
                t_min = std::min(t_min, contacts[k].t_touch);
        }
        if (!std::isfinite(t_min)) continue;

        size_t touch_k = s.obstacles.size();
        for (size_t k = 0; k < s.obstacles.size(); ++k) {
            if (contacts[k].kind == RayContact::Kind::miss) continue;
            if (contacts[k].t_touch > t_min + s.eps_space) continue;
            if (touch_k == s.obstacles.size() || s.obstacles[k].id < s.obstacles[touch_k].id)
                touch_k = k;
        }
        size_t comp = part.component_of[touch_k];

        bool crosses_touched_component = false;
        for (size_t k : part.groups[comp]) {
            if (contacts[k].kind == RayContact::Kind::cross) {
                crosses_touched_component = true;
                break;
            }
        }
        if (crosses_touched_component) continue;

        SupportRay sr;
        sr.ray = ray;
        sr.t_touch = contacts[touch_k].t_touch;
        sr.touch_point = contacts[touch_k].touch_point;
        sr.touch_obstacle = touch_k;
        sr.touch_component = comp;
        for (size_t g = 0; g < part.groups.size(); ++g) {
            if (g == comp) continue;
            double tg = std::numeric_limits<double>::infinity();
            for (size_t k : part.groups[g]) {
                const RayContact& rc = contacts[k];
                bool member_hit = rc.kind == RayContact::Kind::cross ||
                                  (rc.kind == RayContact::Kind::graze && rc.boundary_member_hit);
                if (member_hit) tg = std::min(tg, rc.t_touch);
            }
            if (std::isfinite(tg) && tg > sr.t_touch + s.eps_space)
                sr.hits_beyond.emplace_back(g, tg);
        }
        sr.inner = !sr.hits_beyond.empty();
        out.push_back(std::move(sr));
    }
    return out;
}

std::vector<SupportRay> inner_supporting_rays(const Scene& s, const Vec2& x) {
    std::vector<SupportRay> all = supporting_rays(s, x);
    std::vector<SupportRay> inner;
    for (SupportRay& sr : all)
        if (sr.inner) inner.push_back(std::move(sr));
    return inner;
}

bool AuditReport::all_consistent() const {
    for (const TheoremLine& line : lines)
        if (!line.consistent) return false;
    return true;
}

std::string AuditReport::to_kv() const {
    std::string out;
    auto kv = [&](const char* key, const std::string& value) {
        out += key;
        out += '=';
        out += value;
        out += '\n';
    };
    kv("n_components", format_int(n_components));
    kv("all_smooth", bool_str(all_smooth));
    kv("n_open", format_int(n_open));
    kv("n_closed", format_int(n_closed));
    kv("n_partial", format_int(n_partial));
    kv("weak_pass", bool_str(weak_pass));
    kv("weak_tested", format_int(weak_tested));
    kv("shadow_cells", format_int(shadow_cell_count));
    kv("shadow_components", format_int(shadow_component_count));
    kv("ring_detected", bool_str(ring_detected));
    for (const TheoremLine& line : lines) {
        std::string prefix = "check." + line.name;
        kv((prefix + ".applicable").c_str(), bool_str(line.applicable));
        kv((prefix + ".consistent").c_str(), bool_str(line.consistent));
        kv((prefix + ".details").c_str(), line.details);
    }
    kv("all_consistent", bool_str(all_consistent()));
    return out;
}

std::string AuditReport::to_csv() const {
    std::string out = "check,applicable,consistent,details\n";
    for (const TheoremLine& line : lines) {
        std::string quoted = "\"";
        for (char c : line.details) {
            quoted += c;
            if (c == '"') quoted += '"';
        }
        quoted += '"';
        out += line.name;
        out += ',';
        out += bool_str(line.applicable);
        out += ',';
        out += bool_str(line.consistent);
        out += ',';
        out += quoted;
        out += '\n';
    }
    return out;
}

AuditReport theorem_audit(const Scene& s, double resolution, int samples_per_obstacle,
                          std::uint64_t seed) {
    AuditReport rep;
    ComponentPartition part = components(s);
    rep.n_components = static_cast<int>(part.groups.size());
    rep.all_smooth =
        !part.smooth.empty() && std::all_of(part.smooth.begin(), part.smooth.end(),
                                            [](bool b) { return b; });
    for (const Obstacle& o : s.obstacles) {
        if (o.mode == BoundaryMode::Open) ++rep.n_open;
        if (o.mode == BoundaryMode::Closed) ++rep.n_closed;
        if (o.mode == BoundaryMode::Partial) ++rep.n_partial;
    }
    bool all_open = rep.n_open == static_cast<int>(s.obstacles.size()) && !s.obstacles.empty();
    bool all_closed = rep.n_closed == static_cast<int>(s.obstacles.size()) && !s.obstacles.empty();

    WeakReport weak = weak_semiconvexity_report(s, samples_per_obstacle, true);
    rep.weak_pass = weak.pass;
    rep.weak_tested = weak.tested;

    ShadowRaster raster = shadow_scan(s, resolution);
    rep.shadow_cell_count = raster.shadow_cell_count;
    rep.shadow_component_count = raster.shadow_component_count;
    rep.shadow_nonempty = raster.shadow_cell_count > 0;

    rep.ring_detected = group_has_cycle(s, part.groups) && has_enclosed_exterior(raster);

    // Evenly spread selection of up to 100 shadow cells for the point checks.
    std::vector<Vec2> shadow_points;
    {
        std::vector<Vec2> all;
        for (int iy = 0; iy < raster.ny; ++iy)
            for (int ix = 0; ix < raster.nx; ++ix)
                if (raster.at(ix, iy) == CellClass::shadowed)
                    all.push_back(raster.cell_center(ix, iy));
        size_t stride = std::max<size_t>(1, all.size() / 100);
        for (size_t i = 0; i < all.size() && shadow_points.size() < 100; i += stride)
            shadow_points.push_back(all[i]);
    }

    auto line = [&](const char* name, bool applicable, bool consistent,
                    std::string details) {
        rep.lines.push_back(TheoremLine{name, applicable, consistent, std::move(details)});
    };

    std::string comp_details = "components=" + format_int(rep.n_components);

    bool weak_and_shadow = rep.weak_pass && rep.shadow_nonempty;
    line("thm1", weak_and_shadow, !weak_and_shadow || rep.n_components >= 2, comp_details);

    bool three_app = weak_and_shadow && all_open;
    line("three_components", three_app, !three_app || rep.n_components >= 3, comp_details);

    bool thm2_app = weak_and_shadow && rep.all_smooth && (all_open || all_closed);
    line("thm2", thm2_app, !thm2_app || rep.n_components >= 3, comp_details);

    bool thm3_app = weak_and_shadow && rep.all_smooth && all_open;
    line("thm3", thm3_app, !thm3_app || rep.n_components >= 4, comp_details);

    bool cor1_app = rep.weak_pass && rep.n_components == 1 && !rep.ring_detected;
    line("corollary1", cor1_app, !cor1_app || !rep.shadow_nonempty,
         "shadow_cells=" + format_int(rep.shadow_cell_count));

    // Exactly two supporting rays from exterior points of one smooth obstacle.
    {
        bool smooth_single = rep.n_components == 1 && part.smooth[0];
        bool lemma2_app = smooth_single && s.obstacles[0].mode != BoundaryMode::Partial;
        bool consistent = true;
        std::string details = "not applicable";
        if (rep.n_components == 1) {
            std::mt19937_64 rng(seed);
            BBox box = s.bbox();
            Vec2 span = box.hi - box.lo;
            std::uniform_real_distribution<double> ux(box.lo.x() - 0.5 * span.x(),
                                                      box.hi.x() + 0.5 * span.x());
            std::uniform_real_distribution<double> uy(box.lo.y() - 0.5 * span.y(),
                                                      box.hi.y() + 0.5 * span.y());
            int probes = smooth_single ? 32 : 8;
            int found = 0, min_count = -1, max_count = -1, singles = 0;
            int guard = 0;
            while (found < probes && guard < probes * 200) {
                ++guard;
                Vec2 x{ux(rng), uy(rng)};
                bool exterior = true;
                for (const Obstacle& o : s.obstacles)
                    if (signed_distance(o, x) <= s.eps_space) {
                        exterior = false;
                        break;
                    }
                if (!exterior) continue;
                ++found;
                int count = static_cast<int>(supporting_rays(s, x).size());
                if (min_count < 0 || count < min_count) min_count = count;
                if (count > max_count) max_count = count;
                if (count == 1) ++singles;
                if (lemma2_app && count != 2) consistent = false;
            }
            details = "points=" + format_int(found) + " count_min=" + format_int(min_count) +
                      " count_max=" + format_int(max_count);
            if (!lemma2_app && smooth_single) details = "informational (partial): " + details;
            if (!smooth_single && singles > 0)
                details += " unique_ray_points=" + format_int(singles);
        }
        line("lemma2", lemma2_app, consistent, details);
    }

    // No component's footprint swallowed by the rest, and an inner supporting
    // ray present, at every tested shadow cell.
    {
        bool app = weak_and_shadow && !shadow_points.empty();
        bool lemma3_ok = true, lemma4_ok = true;
        for (const Vec2& x : shadow_points) {
            for (size_t g = 0; g < part.groups.size() && lemma3_ok; ++g) {
                std::vector<size_t> rest;
                for (size_t h = 0; h < part.groups.size(); ++h)
                    if (h != g)
                        rest.insert(rest.end(), part.groups[h].begin(), part.groups[h].end());
                if (is_projected(s, part.groups[g], rest, x)) lemma3_ok = false;
            }
            if (inner_supporting_rays(s, x).empty()) lemma4_ok = false;
            if (!lemma3_ok && !lemma4_ok) break;
        }
        std::string pts = "shadow_points=" + format_int(static_cast<long long>(shadow_points.size()));
        line("lemma3", app, !app || lemma3_ok, pts);
        line("lemma4", app, !app || lemma4_ok, pts);
    }

    bool prop1_app = all_open && !rep.shadow_nonempty;
    line("prop1", prop1_app, !prop1_app || rep.weak_pass,
         "weak_pass=" + std::string(bool_str(rep.weak_pass)));

    line("prop2", rep.weak_pass && !rep.ring_detected, true,
         rep.ring_detected ? "ring-like union; simple connectivity not guaranteed"
                           : "component groups are cycle-free or non-enclosing");

    return rep;
}

}  // namespace semiconvex
