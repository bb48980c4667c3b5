#pragma once

// Rational Seifert surface of a knot diagram in L(p,q): r sheets over the
// smoothed link L, walls over the c_mu1 mu1-system, splice hubs where L meets
// the walls, r-cover half-twist bands at crossings, and caps on the auxiliary
// links L+ (level +1) and L- (level -1).

#include "seifert/diagram.hpp"
#include "seifert/error.hpp"
#include "seifert/surface_complex.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace seifert {

struct Placement {
  std::vector<Rational> lower_heights;      // L- = c_mu1 mu1 at level -1
  std::vector<Rational> upper_mu1_heights;  // -c_mu1 mu1 at level +1
  Rational offset;                          // upper - lower, same for every pair
  Rational system_x0;                       // first vertex abscissa of every mu1 copy
  Rational eps_parallel;                    // spacing of the r parallel copies
  Rational ball_radius;                     // corner cut half-width (edge parameter)
  std::uint64_t seed = 0;
};

/// One point of L on an upper mu1-height. epsilon = sign det[tangent of L, upper direction].
struct SplicePoint {
  std::size_t component = 0;
  EdgeLocation at;
  std::size_t height = 0;
  int epsilon = 0;
  Vec2 point;
};

struct UpperLink {
  MultiCurve components;
  std::vector<ComponentKind> kinds;
  std::vector<SplicePoint> splices;
  MultiCurve parallel;  // rL, r copies per component of L
};

struct TwistBandPiece {
  std::int64_t r = 1;
  int sign = 1;
  SurfaceComplex fragment;
  std::vector<SlotRef> c0;  // c0[k]: attaches to sheet k at the corner entered by the over strand
  std::vector<SlotRef> c1;  // c1[k]: attaches to sheet k at the other corner, before mirroring
  std::vector<std::size_t> sheet_permutation;  // k -> r-1-k
  std::int64_t mu_contribution = 0;            // -sign * r
};

struct Cobordism {
  SurfaceComplex complex;
  std::int64_t splice_mu = 0;  // sum of hole-arc meridian tags
  std::int64_t twist_mu = 0;   // sum of band meridian tags
  std::size_t sheet_faces = 0;
  std::size_t wall_faces = 0;
  std::size_t hub_faces = 0;
  std::size_t band_faces = 0;
};

struct CapSummary {
  std::size_t lower_disks = 0;
  std::size_t mu2_disks = 0;
  std::size_t null_disks = 0;
  std::size_t annuli = 0;
};

struct Verdict {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
  Stage stage = Stage::Verify;
};

struct CycleSlope {
  Rational dlambda;
  std::int64_t dmu = 0;
};

struct SeifertReport {
  LensSpace lens;
  TorusClass cls;
  ClassDecomposition dec;
  std::int64_t writhe = 0;
  std::size_t crossings = 0;
  std::vector<TorusClass> l_components;
  std::vector<TorusClass> l_plus_classes;   // geometric L+
  std::vector<TorusClass> l_minus_classes;  // geometric L-
  std::size_t l_plus_null = 0, l_plus_mu1 = 0, l_plus_mu2 = 0, l_plus_other = 0;
  std::vector<std::size_t> null_cap_depths;  // nesting depth of each null L+ component
  std::size_t splice_count = 0;
  std::int64_t splice_sum = 0;   // -sum epsilon over the geometric intersections
  std::int64_t twist_sum = 0;    // from the band tags of the complex
  std::vector<TorusClass> upper_cycle_classes;  // complex upper boundary, before capping
  std::vector<TorusClass> lower_cycle_classes;
  Placement placement;
  CapSummary caps;
  std::size_t faces = 0;
  std::int64_t euler = 0;              // V - E + F recount
  std::int64_t euler_incremental = 0;  // bookkeeping during assembly
  bool orientable = false;
  std::size_t surface_components = 0;
  std::int64_t genus = 0;  // summed over components
  std::size_t boundary_count = 0;
  std::size_t non_tube_cycles = 0;
  std::vector<CycleSlope> cycle_slopes;
  Rational slope_lambda;  // sum over KnotTube cycles
  std::int64_t slope_mu = 0;
  BoundarySlope corollary;
  std::vector<Verdict> verdicts;

  bool all_pass() const;
};

/// Heights of the mu1-systems in a free gap of L's y-projection; deterministic in `seed`.
Placement plan_placement(const SmoothingResult& L, std::int64_t c_mu1, std::int64_t r, std::uint64_t seed);

/// rL, the -c_mu1 system, their oriented smoothing L+ with classification, and
/// the splice points of L. Shrinks plan.eps_parallel until every copy meets
/// the system exactly like L does.
UpperLink build_upper_link(const LensSpace& lens, const SmoothingResult& L, Placement& plan, std::int64_t r,
                           std::int64_t c_mu1);

MultiCurve build_lower_link(const Placement& plan, std::int64_t c_mu1);

TwistBandPiece make_twist_band(std::int64_t r, int sign);

Cobordism assemble_cobordism(const KnotDiagram& d, const SmoothingResult& L, const UpperLink& upper,
                             const Placement& plan, std::int64_t r, std::int64_t c_mu1);

/// Caps every upper/lower boundary cycle. Throws Error(UncappableComponents).
CapSummary cap_all(SurfaceComplex& s, const LensSpace& lens);

/// Nesting depth of each null-homologous component among the others.
std::vector<std::size_t> nesting_depths(const MultiCurve& m);

struct BuildOptions {
  std::uint64_t seed = 0;
  int writhe_sign = 1;  // -1 checks the corollary under the mirrored crossing convention
};

/// Full pipeline plus verification. Errors carry their stage.
SeifertReport build(const KnotDiagram& d, const BuildOptions& options = {});

/// Independent builds of many diagrams; OpenMP over diagrams. Failed builds
/// return a report whose single verdict carries the error.
std::vector<SeifertReport> build_batch(const std::vector<KnotDiagram>& ds, const BuildOptions& options = {});
std::vector<SeifertReport> build_batch_serial(const std::vector<KnotDiagram>& ds, const BuildOptions& options = {});

}  // namespace seifert
