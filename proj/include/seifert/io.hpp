#pragma once

// Diagram files, report serialization and the file-level pipeline entry points.
//
// Diagram file (JSON):
//   { "lens": {"p": 3, "q": 1},
//     "vertices": [["1/7", "1/11"], ...],        reduced, in [0,1)^2
//     "windings": [[0, 0], ...],                 one per edge
//     "crossings": [{"index": 0, "over": "earlier"}, ...] }

#include "seifert/builder.hpp"

#include <string>
#include <vector>

namespace seifert {

struct CrossingTag {
  std::size_t index = 0;
  Over over = Over::Earlier;
  friend bool operator==(const CrossingTag&, const CrossingTag&) = default;
};

struct DiagramFile {
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::vector<Vec2> vertices;
  std::vector<TorusClass> windings;
  std::vector<CrossingTag> crossings;
  friend bool operator==(const DiagramFile&, const DiagramFile&) = default;
};

/// Throws Error(Parse) with a line/column or a field path.
DiagramFile parse_diagram_file(const std::string& text);
std::string serialize(const DiagramFile& f);

/// Validation errors (lens, cycle, regularity, tags) are raised with Stage::Validation.
KnotDiagram to_diagram(const DiagramFile& f);
DiagramFile to_file(const KnotDiagram& d);

KnotDiagram parse(const std::string& text);

DiagramFile gen_random(const LensSpace& lens, TorusClass target, std::size_t crossings, std::uint64_t seed);

/// Report as pretty-printed JSON (schema in README).
std::string report_json(const SeifertReport& r);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace seifert
