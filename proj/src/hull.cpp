#include <semiconvex/hull.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace semiconvex {

namespace {

// Grid walk from the center of cell (sx, sy): true when the ray crosses a
// marked cell other than its own before leaving the raster.
bool mask_blocks(const HullRaster& r, const std::vector<char>& mask, int sx, int sy,
                 const Ray& ray) {
    const Vec2 d = ray.dir();
    const Vec2 o = ray.origin;
    int ix = sx, iy = sy;
    const int stepx = d.x() > 0 ? 1 : (d.x() < 0 ? -1 : 0);
    const int stepy = d.y() > 0 ? 1 : (d.y() < 0 ? -1 : 0);
    const double inf = std::numeric_limits<double>::infinity();
    double tmaxx = inf, tdx = inf, tmaxy = inf, tdy = inf;
    if (stepx != 0) {
        double bx = r.box.lo.x() + (ix + (stepx > 0 ? 1 : 0)) * r.resolution;
        tmaxx = (bx - o.x()) / d.x();
        tdx = r.resolution / std::abs(d.x());
    }
    if (stepy != 0) {
        double by = r.box.lo.y() + (iy + (stepy > 0 ? 1 : 0)) * r.resolution;
        tmaxy = (by - o.y()) / d.y();
        tdy = r.resolution / std::abs(d.y());
    }
    while (true) {
        if (tmaxx < tmaxy) {
            ix += stepx;
            tmaxx += tdx;
        } else {
            iy += stepy;
            tmaxy += tdy;
        }
        if (ix < 0 || ix >= r.nx || iy < 0 || iy >= r.ny) return false;
        if (mask[static_cast<size_t>(r.index(ix, iy))]) return true;
    }
}

// Probe directions inside one exactly-free arc: midpoint, both ends (inset
// when the arc has width), then an even lattice no coarser than `gap`.
void arc_probes(const Arc& a, double gap, std::vector<double>& out) {
    out.clear();
    if (a.width <= 0.0) {
        out.push_back(a.start);
        return;
    }
    double inset = std::min(1e-7, a.width / 4.0);
    out.push_back(a.start + a.width / 2.0);
    out.push_back(a.start + inset);
    out.push_back(a.end() - inset);
    int m = static_cast<int>(a.width / gap);
    for (int j = 0; j < m; ++j) out.push_back(a.start + (j + 0.5) * (a.width / m));
}

}  // namespace

std::string HullRaster::to_pgm() const {
    std::string s = "P2\n" + std::to_string(nx) + " " + std::to_string(ny) + "\n255\n";
    for (int iy = ny - 1; iy >= 0; --iy) {
        for (int ix = 0; ix < nx; ++ix) {
            HullCell c = at(ix, iy);
            s += (c == HullCell::seed ? "0" : c == HullCell::added ? "128" : "255");
            s += (ix + 1 == nx) ? '\n' : ' ';
        }
    }
    return s;
}

HullRaster semiconvex_hull_grid(const Scene& s, double resolution, int max_iter, int base_dirs) {
    if (!(resolution > 0.0))
        throw std::invalid_argument("semiconvex_hull_grid: resolution must be > 0");
    if (max_iter < 1) throw std::invalid_argument("semiconvex_hull_grid: max_iter must be >= 1");

    ShadowRaster sr = shadow_scan(s, resolution);
    HullRaster r;
    r.box = sr.box;
    r.resolution = sr.resolution;
    r.nx = sr.nx;
    r.ny = sr.ny;
    r.cells.assign(sr.cells.size(), HullCell::out);
    for (size_t i = 0; i < sr.cells.size(); ++i) {
        if (sr.cells[i] == CellClass::occupied)
            r.cells[i] = HullCell::seed;
        else if (sr.cells[i] == CellClass::shadowed)
            r.cells[i] = HullCell::added;
    }
    r.iterations = 1;
    r.last_delta = sr.shadow_cell_count;
    r.added_per_iter = {sr.shadow_cell_count};

    std::vector<int> out_cells;
    std::vector<ArcSet> free_arcs(r.cells.size());
    for (int iy = 0; iy < r.ny; ++iy)
        for (int ix = 0; ix < r.nx; ++ix) {
            int i = r.index(ix, iy);
            if (r.cells[static_cast<size_t>(i)] != HullCell::out) continue;
            out_cells.push_back(i);
            free_arcs[static_cast<size_t>(i)] = arcset_complement(
                direction_cover(s, r.cell_center(ix, iy)), s.eps_angle);
        }

    const double diag = std::hypot(r.box.width(), r.box.height());
    const int n_eff =
        std::max(base_dirs, static_cast<int>(std::ceil(kTwoPi * diag / resolution)));
    const double gap = kTwoPi / n_eff;

    std::vector<char> mask(r.cells.size());
    std::vector<double> probes;
    while (r.last_delta > 0 && r.iterations < max_iter) {
        for (size_t i = 0; i < r.cells.size(); ++i) mask[i] = r.cells[i] != HullCell::out;

        std::vector<int> next_out;
        std::vector<int> added;
        for (int i : out_cells) {
            int ix = i % r.nx, iy = i / r.nx;
            Vec2 p = r.cell_center(ix, iy);
            bool escapes = false;
            for (const Arc& a : free_arcs[static_cast<size_t>(i)]) {
                arc_probes(a, gap, probes);
                for (double ang : probes) {
                    // The direction misses the scene exactly; only the
                    // current hull cells can still block it.
                    if (!mask_blocks(r, mask, ix, iy, Ray{p, normalize_angle(ang)})) {
                        escapes = true;
                        break;
                    }
                }
                if (escapes) break;
            }
            if (escapes)
                next_out.push_back(i);
            else
                added.push_back(i);
        }
        for (int i : added) r.cells[static_cast<size_t>(i)] = HullCell::added;
        out_cells = std::move(next_out);
        r.last_delta = static_cast<int>(added.size());
        r.added_per_iter.push_back(r.last_delta);
        ++r.iterations;
    }
    r.converged = r.last_delta == 0;
    return r;
}

}  // namespace semiconvex
