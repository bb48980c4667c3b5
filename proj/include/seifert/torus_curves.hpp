#pragma once

// Exact piecewise-linear curves on T^2 = R^2 / Z^2.
//
// A PLCycle stores reduced vertices v_i in [0,1)^2 and per-edge integer
// windings w_i; edge i is the lifted segment from v_i to v_{i+1} + w_i.
// (mu1, lambda1) = (x, y) is a positive basis, so mu1 . lambda1 = +1.

#include "seifert/lens_algebra.hpp"
#include "seifert/rational.hpp"

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

namespace seifert {

inline constexpr std::int64_t kMaxEdgeWinding = 64;
inline constexpr std::size_t kMaxCycleVertices = 4096;

class PLCycle {
 public:
  PLCycle() = default;
  /// Throws Error(InvalidCycle) unless the structural invariants hold.
  PLCycle(std::vector<Vec2> vertices, std::vector<TorusClass> windings);

  /// Builds a cycle from a lifted start point and edge displacements whose sum is integral.
  static PLCycle from_displacements(const Vec2& start, const std::vector<Vec2>& displacements);

  std::size_t size() const { return vertices_.size(); }
  const Vec2& vertex(std::size_t i) const { return vertices_[i]; }
  const TorusClass& winding(std::size_t i) const { return windings_[i]; }
  const std::vector<Vec2>& vertices() const { return vertices_; }
  const std::vector<TorusClass>& windings() const { return windings_; }

  /// Lift displacement of edge i.
  Vec2 edge_vector(std::size_t i) const;
  /// Point at parameter t of edge i, in the lift based at vertex i.
  Vec2 point_at(std::size_t i, const Rational& t) const;

  TorusClass homology_class() const;
  PLCycle reversed() const;
  /// Cyclic re-indexing: new vertex 0 is old vertex k.
  PLCycle rotated(std::size_t k) const;

  friend bool operator==(const PLCycle&, const PLCycle&) = default;

 private:
  std::vector<Vec2> vertices_;
  std::vector<TorusClass> windings_;
};

using MultiCurve = std::vector<PLCycle>;

struct EdgeLocation {
  std::size_t edge = 0;
  Rational t;  // strictly inside (0,1)

  friend bool operator==(const EdgeLocation&, const EdgeLocation&) = default;
};

bool operator<(const EdgeLocation& a, const EdgeLocation& b);

/// A transverse double point. For self-intersections `a` is the strand
/// earlier in curve parameter. sign = sign det[tangent_a, tangent_b].
struct IntersectionPoint {
  Vec2 point;  // reduced to [0,1)^2
  EdgeLocation a;
  EdgeLocation b;
  int sign = 0;
};

TorusClass homology_class(const PLCycle& c);
TorusClass homology_class(const MultiCurve& m);

/// All double points of c, canonically ordered. Throws Error with code
/// TriplePoint, NonTransverse or IntersectionAtVertex on non-regular curves.
std::vector<IntersectionPoint> self_intersections(const PLCycle& c);

/// All crossings between two distinct cycles, ordered by location on `a`.
std::vector<IntersectionPoint> intersect_pair(const PLCycle& a, const PLCycle& b);

/// Throws unless c is embedded / the multicurve is embedded and pairwise disjoint.
void require_embedded(const PLCycle& c);
void require_embedded(const MultiCurve& m);

/// r copies at normal offsets eps, 2 eps, ..., r eps to the left of c.
/// Offsets use the L1-normalised normal so everything stays rational.
MultiCurve parallel_copies(const PLCycle& c, std::int64_t r, const Rational& eps);

/// |count| straight mu1 curves at the given heights, oriented by sign(count),
/// with vertices at x0, x0 + 1/3, x0 + 2/3.
MultiCurve horizontal_system(std::int64_t count, const std::vector<Rational>& heights, const Rational& x0 = Rational(0));

/// Provenance of an edge produced by oriented smoothing.
struct SmoothedEdge {
  bool corner = false;
  std::size_t crossing = 0;    // corner: index into the crossing list
  int entry_strand = 0;        // corner: 0 if the incoming strand is crossing.a, else 1
  std::size_t src_curve = 0;   // piece: source curve
  std::size_t src_edge = 0;    // piece: source edge
  Rational t_from;             // piece: parameter range on the source edge
  Rational t_to;
};

/// A crossing between (possibly equal) curves of a multicurve.
struct CurveCrossing {
  std::size_t curve_a = 0;
  EdgeLocation a;
  std::size_t curve_b = 0;
  EdgeLocation b;
};

struct SmoothingResult {
  MultiCurve components;
  std::vector<std::vector<SmoothedEdge>> provenance;  // parallel to components' edges
  Rational cut;                                       // parameter half-width of the short-cut corners
};

/// Oriented (Seifert) smoothing of the given crossings: the incoming strand of
/// each crossing continues along the outgoing partner strand through a short
/// straight corner. Output is embedded and class-preserving (verified).
SmoothingResult smooth_crossings_of(const MultiCurve& curves, const std::vector<CurveCrossing>& crossings);

/// Smooths every crossing between distinct components (each must be embedded).
MultiCurve oriented_smooth_all(const MultiCurve& m);

struct NullHomologous {
  friend bool operator==(const NullHomologous&, const NullHomologous&) = default;
};
struct Mu1Type {
  int sign = 1;
  friend bool operator==(const Mu1Type&, const Mu1Type&) = default;
};
struct Mu2Type {
  int sign = 1;
  friend bool operator==(const Mu2Type&, const Mu2Type&) = default;
};
struct OtherType {
  TorusClass cls;
  friend bool operator==(const OtherType&, const OtherType&) = default;
};
using ComponentKind = std::variant<NullHomologous, Mu1Type, Mu2Type, OtherType>;

ComponentKind classify_class(TorusClass cls, const LensSpace& lens);
ComponentKind classify_component(const PLCycle& c, const LensSpace& lens);

namespace detail {

/// Raw contact between edge i of one cycle and edge j of another (or the same)
/// cycle under integer translation T of the second.
struct Contact {
  std::size_t i = 0;
  std::size_t j = 0;
  TorusClass shift;
  Rational s;
  Rational t;
  bool overlap = false;
};

/// Exact enumeration of all segment contacts; `same` skips the pair (i,i,T=0).
/// The parallel variant splits the outer loop over OpenMP threads and returns
/// the same set in the same order as the serial reference.
std::vector<Contact> enumerate_contacts_serial(const PLCycle& a, const PLCycle& b, bool same);
std::vector<Contact> enumerate_contacts_parallel(const PLCycle& a, const PLCycle& b, bool same);

}  // namespace detail

}  // namespace seifert
