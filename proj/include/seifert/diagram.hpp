#pragma once

// Knot diagrams on the Heegaard torus: a regular PL projection plus
// over/under data at each transverse double point.

#include "seifert/lens_algebra.hpp"
#include "seifert/torus_curves.hpp"

#include <vector>

namespace seifert {

/// Which strand of a crossing, by curve parameter, lies nearer V2.
enum class Over { Earlier, Later };

struct Crossing {
  IntersectionPoint geometry;
  Over over = Over::Earlier;
  int sign = 0;  // sign det[tangent_over, tangent_under]
};

struct KnotDiagram {
  LensSpace lens;
  PLCycle curve;
  std::vector<Crossing> crossings;  // canonical intersection order
};

/// Checks regularity (only transverse double points) and attaches the over
/// tags, given in canonical intersection order. Errors are raised with
/// Stage::Validation: TriplePoint, NonTransverse, IntersectionAtVertex, or
/// CrossingCountMismatch when the tags do not match the detected crossings.
KnotDiagram validate_regular(const LensSpace& lens, const PLCycle& curve, const std::vector<Over>& over);

std::int64_t writhe(const KnotDiagram& d);

/// Seifert smoothing of every crossing (the torus link L), with provenance
/// mapping each edge of L back to the knot or to a crossing corner.
SmoothingResult smooth_crossings(const KnotDiagram& d);

}  // namespace seifert
