#pragma once

#include <iosfwd>

namespace rauzy {

// Writes all level-n image triangles projected to the plane as an SVG
// document. Deterministic: fixed canvas, fixed precision, triangles in
// lexicographic word order.
void render_gasket_svg(int n, std::ostream& os, int enumeration_cap = 12);

}  // namespace rauzy
