#pragma once

// Cross-checks of a built surface. Each verdict compares a number measured on
// the complex or the geometry with one computed from the class algebra.

#include "seifert/builder.hpp"

#include <vector>

namespace seifert {

/// KnotTube slope totals against corollary_slope, recomputed from the report's
/// lens, decomposition and writhe.
Verdict check_corollary(const SeifertReport& report);

/// splice-sum, twist-sum, longitude-total, l-plus-budget, l-minus-budget,
/// upper-cycles, lower-cycles, euler-recount, orientable, tube-only-boundary,
/// boundary-count, cycle-slopes.
std::vector<Verdict> check_budgets(const SeifertReport& report);

/// Classical Seifert algorithm oracle for null-homologous diagrams whose
/// Seifert circles are all null-homologous: chi = #circles - #crossings and
/// genus = (1 - chi)/2. Throws Error(InapplicableClass) otherwise.
Verdict s3_oracle(const KnotDiagram& d);

}  // namespace seifert
