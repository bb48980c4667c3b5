#pragma once

// Abstract polygonal surfaces: faces are cyclic lists of edge slots, slots
// are glued in pairs, and unpaired slots carry boundary tags.
//
// Slot i of a k-gon runs from corner i to corner (i+1) mod k. glue(a, b, true)
// identifies start(a) with end(b): the orientation-compatible gluing of two
// counter-clockwise faces.

#include "seifert/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace seifert {

struct SlotRef {
  std::size_t face = 0;
  std::size_t index = 0;
  friend bool operator==(const SlotRef&, const SlotRef&) = default;
};

enum class TagKind { None, KnotTube, UpperLink, LowerLink, CapSeam };

const char* to_string(TagKind kind);

struct BoundaryTag {
  TagKind kind = TagKind::None;
  Rational dlambda;   // KnotTube: longitude increment along the slot direction
  std::int64_t dmu = 0;  // KnotTube: meridian increment
  Vec2 displacement;  // Upper/LowerLink: lift displacement on the Heegaard torus
  std::int64_t component = -1;
};

struct BoundaryCycle {
  struct Step {
    SlotRef slot;
    int direction = 1;
  };
  std::vector<Step> steps;
  TagKind kind = TagKind::None;  // None if the slots carry mixed kinds
  Rational dlambda;
  std::int64_t dmu = 0;
  Vec2 displacement;
  std::size_t component = 0;  // connected component of the complex
};

struct ComponentTopology {
  std::vector<std::size_t> faces;
  std::int64_t euler = 0;
  std::size_t boundary_count = 0;
  bool orientable = true;
  std::optional<std::int64_t> genus;  // orientable components only
};

class SurfaceComplex {
 public:
  /// New k-gon with k free slots. Throws Error(InvalidFace) for k == 0.
  std::size_t add_face(std::size_t k);
  /// Throws SlotAlreadyPaired / SelfSlot.
  void glue(SlotRef a, SlotRef b, bool reversed = true);
  void set_tag(SlotRef s, BoundaryTag tag);
  /// Copies every face, gluing and tag of `other`; returns the face offset.
  std::size_t append(const SurfaceComplex& other);

  std::size_t face_count() const { return faces_.size(); }
  std::size_t face_size(std::size_t f) const { return faces_[f].size; }
  bool is_free(SlotRef s) const;
  const BoundaryTag& tag(SlotRef s) const;

  /// V - E + F recounted from scratch.
  std::int64_t euler_characteristic() const;
  /// The same number maintained incrementally by add_face/glue.
  std::int64_t incremental_euler() const { return inc_vertices_ - inc_edges_ + static_cast<std::int64_t>(faces_.size()); }

  std::vector<BoundaryCycle> boundary_cycles() const;
  bool orientable() const;
  /// Face partition into connected components.
  std::vector<std::vector<std::size_t>> components() const;
  /// Per-component chi, boundary count, orientability and genus. Throws
  /// Error(AssemblyInvariant) if an orientable component has odd 2 - chi - b.
  std::vector<ComponentTopology> topology() const;
  /// Genus of the connected component containing `face`.
  /// Throws Error(GenusOfNonorientable) if that component is non-orientable.
  std::int64_t genus(std::size_t face) const;

 private:
  struct Pairing {
    SlotRef other;
    bool reversed = true;
  };
  struct Face {
    std::size_t size = 0;
    std::size_t first_corner = 0;
    std::vector<std::optional<Pairing>> pair;
    std::vector<BoundaryTag> tags;
  };

  std::size_t corner(std::size_t face, std::size_t i) const;
  std::size_t find_inc(std::size_t v);
  void check_slot(SlotRef s) const;
  std::vector<std::int8_t> face_orientation(std::vector<bool>* orientable_by_face) const;

  std::vector<Face> faces_;
  std::vector<std::pair<SlotRef, Pairing>> glue_log_;
  std::vector<std::size_t> inc_parent_;
  std::int64_t inc_vertices_ = 0;
  std::int64_t inc_edges_ = 0;
};

}  // namespace seifert
