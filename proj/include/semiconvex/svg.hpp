#pragma once

// Deterministic SVG rendering of scenes with optional analysis overlays.
// Element order, formatting, and styling are fixed, so output bytes are
// stable for identical inputs.

#include <semiconvex/analysis.hpp>
#include <semiconvex/hull.hpp>

#include <string>
#include <vector>

namespace semiconvex {

struct SvgOverlays {
    const ShadowRaster* shadow = nullptr;  // shadowed cells shaded
    const HullRaster* hull = nullptr;      // grown hull cells shaded
    std::vector<SupportRay> rays;          // arrows; inner rays dash past the touch
    std::vector<Ray> witnesses;            // free-direction arrows
};

// Obstacle boundaries: dashed when open, solid when closed, and for partial
// disks solid strokes only along the included arcs (degenerate included
// points become dots).  Axes are always drawn; an empty scene renders an
// empty canvas with axes.
std::string render_svg(const Scene& s, const SvgOverlays& overlays = {});

}  // namespace semiconvex
