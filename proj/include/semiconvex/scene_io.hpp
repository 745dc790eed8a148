#pragma once

// Scene files: JSON with angles in degrees (the core works in radians; this
// is the single conversion boundary).  Obstacles are addressed by position,
// so parsing assigns ids 0..n-1 in array order and serialization emits the
// obstacle list positionally.  parse(serialize(s)) reproduces s structurally
// for scenes with positional ids, and serialize(parse(text)) is byte-stable
// on canonical (serializer-produced) files.

#include <semiconvex/obstacle.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace semiconvex {

struct SceneParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Accepts:
//   { "eps_angle": 1e-9, "eps_space": 1e-9, "obstacles": [ ... ] }
// with obstacles one of
//   {"kind":"disk","center":[x,y],"radius":r,"boundary":"open"|"closed"}
//   {"kind":"disk",...,"boundary":"partial","included_arcs":[[s_deg,e_deg,"cc"|"oo"|"co"|"oc"],...]}
//   {"kind":"polygon","vertices":[[x,y],...],"boundary":"open"|"closed"}
//   {"kind":"capsule","a":[x,y],"b":[x,y],"radius":r,"boundary":"open"|"closed"}
// Unknown keys are rejected.  Errors carry the byte position (syntax) or the
// obstacle index (validation).
Scene parse_scene(const std::string& text);

// Canonical, byte-stable form: two-space indent, fixed key order, obstacles
// in vector order, included arcs canonicalized, trailing newline.
std::string serialize_scene(const Scene& s);

// Built-in deterministic scenes:
//   pinwheel_rects    four thin rectangles chasing each other around the
//                     origin with 0.1 gaps (default open)
//   pinwheel_capsules the capsules inscribed in those rectangles (default open)
//   compass_disks     radius-sqrt(2) disks at (+-2,0),(0,+-2) (default closed)
//   hook_pair         two 3-rectangle hooks facing each other (default closed)
//   ring(k) / ring(k,rho)  k equal disks on the unit circle at radius
//                     rho*sin(pi/k), rho in (0,1), default 0.9 (default closed)
// The mode override applies to every obstacle; Partial is rejected.  Unknown
// names throw std::invalid_argument listing the available fixtures.  Every
// fixture is validated before it is returned.
Scene fixture(const std::string& name);
Scene fixture(const std::string& name, BoundaryMode mode);

std::vector<std::string> fixture_names();

}  // namespace semiconvex
