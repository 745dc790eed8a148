#pragma once

// Grid-fixpoint outer approximation of the smallest superset of the scene
// from which every exterior point still sees a free ray.  Cells join the
// hull when no direction escapes both the exact scene and the cells already
// in the hull.

#include <semiconvex/analysis.hpp>

#include <string>
#include <vector>

namespace semiconvex {

enum class HullCell { out, seed, added };

struct HullRaster {
    BBox box;
    double resolution = 0.0;
    int nx = 0, ny = 0;
    std::vector<HullCell> cells;  // row-major, index = iy*nx + ix
    int iterations = 0;           // passes run, including the exact first pass
    bool converged = false;       // a pass added nothing before max_iter ran out
    int last_delta = 0;           // cells added by the final pass
    std::vector<int> added_per_iter;

    int index(int ix, int iy) const { return iy * nx + ix; }
    HullCell at(int ix, int iy) const { return cells[static_cast<size_t>(index(ix, iy))]; }
    bool in_hull(int ix, int iy) const { return at(ix, iy) != HullCell::out; }
    Vec2 cell_center(int ix, int iy) const {
        return box.lo + Vec2{(ix + 0.5) * resolution, (iy + 0.5) * resolution};
    }

    // Portable graymap: seed cells 0, added cells 128, outside 255; top row
    // first.  Byte-stable.
    std::string to_pgm() const;
};

// Pass 1 classifies cell centers exactly (occupied cells seed the hull,
// centers with no free direction join immediately).  Every later pass keeps
// a cell out only if some exactly-free direction also threads the current
// hull cells: free arcs are probed at their midpoints, just inside their
// tangency endpoints, and on a lattice fine enough that a one-cell window
// at the raster diagonal cannot fall between probes (at least base_dirs
// probes per full turn).  Growth is monotone; the raster geometry matches
// shadow_scan at the same resolution.
HullRaster semiconvex_hull_grid(const Scene& s, double resolution, int max_iter = 32,
                                int base_dirs = 720);

}  // namespace semiconvex
