#pragma once

// SVG drawing of a diagram in the twisted fundamental domain of L(p,q):
// the unit square sheared by (x, y) -> (x, y - (q/p) x).

#include "seifert/diagram.hpp"

#include <string>
#include <vector>

namespace seifert {

struct Overlay {
  MultiCurve curves;
  std::string color;
  std::string label;
};

/// Domain corners in SVG user units, counter-clockwise from the origin of the torus chart.
/// Side length is a multiple of p so all corners are integral.
std::vector<std::pair<std::int64_t, std::int64_t>> domain_corners(const LensSpace& lens);

std::string render_svg(const KnotDiagram& d, const std::vector<Overlay>& overlays = {});

}  // namespace seifert
