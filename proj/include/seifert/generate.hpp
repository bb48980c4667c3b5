#pragma once

// Diagram generators: closed braids in a disk chart, torus braids sheared to
// an arbitrary class, Reidemeister-I kinks, and seeded random diagrams.

#include "seifert/diagram.hpp"

#include <cstdint>
#include <vector>

namespace seifert {

/// sigma_generator^sign; generator i (1-based) exchanges positions i-1 and i.
struct BraidLetter {
  int generator = 1;
  int sign = 1;
};

/// Closure of an n-strand braid drawn counter-clockwise around (1/2, 1/2).
/// The permutation must be an n-cycle. Crossing signs follow the letters.
KnotDiagram closed_braid_in_disk(const LensSpace& lens, int strands, const std::vector<BraidLetter>& word);

/// Closure of an n-strand braid running along the primitive class `direction`;
/// the knot has class strands * direction.
KnotDiagram torus_braid(const LensSpace& lens, int strands, const std::vector<BraidLetter>& word,
                        TorusClass direction);

/// Inserts a small curl of the given crossing sign in the middle of `edge`.
/// Existing crossings keep their signs. Throws Error(GenerationFailure) if no
/// curl fits.
KnotDiagram add_kink(const KnotDiagram& d, std::size_t edge, int sign);

/// Regular diagram with exactly `crossings` crossings and knot class `cls`.
/// Deterministic in `seed`. Throws Error(GenerationFailure) when the class
/// needs more crossings than requested.
KnotDiagram random_diagram(const LensSpace& lens, TorusClass cls, std::size_t crossings, std::uint64_t seed);

/// Re-validates `curve`, choosing over/under so that each crossing whose point
/// appears in `signs` gets that sign; other crossings get `fallback`.
KnotDiagram diagram_with_signs(const LensSpace& lens, const PLCycle& curve,
                               const std::vector<std::pair<Vec2, int>>& signs, int fallback = 1);

}  // namespace seifert
