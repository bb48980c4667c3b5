#include "seifert/diagram.hpp"

#include "seifert/error.hpp"

#include <string>

namespace seifert {

KnotDiagram validate_regular(const LensSpace& lens, const PLCycle& curve, const std::vector<Over>& over) {
  std::vector<IntersectionPoint> points;
  try {
    points = self_intersections(curve);
  } catch (const Error& e) {
    throw Error(e.code(), std::string("diagram is not regular: ") + e.what(), Stage::Validation);
  }
  if (points.size() != over.size())
    throw Error(ErrorCode::CrossingCountMismatch,
                "diagram has " + std::to_string(points.size()) + " crossings but " + std::to_string(over.size()) +
                    " over/under tags",
                Stage::Validation);
  KnotDiagram d{lens, curve, {}};
  d.crossings.reserve(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    Crossing c{std::move(points[k]), over[k], 0};
    c.sign = over[k] == Over::Earlier ? c.geometry.sign : -c.geometry.sign;
    d.crossings.push_back(std::move(c));
  }
  return d;
}

std::int64_t writhe(const KnotDiagram& d) {
  std::int64_t w = 0;
  for (const auto& c : d.crossings) w += c.sign;
  return w;
}

SmoothingResult smooth_crossings(const KnotDiagram& d) {
  std::vector<CurveCrossing> crossings;
  crossings.reserve(d.crossings.size());
  for (const auto& c : d.crossings) crossings.push_back({0, c.geometry.a, 0, c.geometry.b});
  return smooth_crossings_of({d.curve}, crossings);
}

}  // namespace seifert
