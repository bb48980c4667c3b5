#include "seifert/surface_complex.hpp"

#include "seifert/error.hpp"

#include <numeric>
#include <string>

namespace seifert {

const char* to_string(TagKind kind) {
  switch (kind) {
    case TagKind::None: return "none";
    case TagKind::KnotTube: return "knot-tube";
    case TagKind::UpperLink: return "upper-link";
    case TagKind::LowerLink: return "lower-link";
    case TagKind::CapSeam: return "cap-seam";
  }
  return "unknown";
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

std::size_t SurfaceComplex::add_face(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidFace, "a face needs at least one edge slot", Stage::Assembly);
  Face f;
  f.size = k;
  f.first_corner = inc_parent_.size();
  f.pair.resize(k);
  f.tags.resize(k);
  for (std::size_t i = 0; i < k; ++i) inc_parent_.push_back(inc_parent_.size());
  inc_vertices_ += static_cast<std::int64_t>(k);
  inc_edges_ += static_cast<std::int64_t>(k);
  faces_.push_back(std::move(f));
  return faces_.size() - 1;
}

void SurfaceComplex::check_slot(SlotRef s) const {
  if (s.face >= faces_.size() || s.index >= faces_[s.face].size)
    throw Error(ErrorCode::InvalidFace,
                "no slot " + std::to_string(s.index) + " on face " + std::to_string(s.face), Stage::Assembly);
}

std::size_t SurfaceComplex::corner(std::size_t face, std::size_t i) const {
  return faces_[face].first_corner + (i % faces_[face].size);
}

std::size_t SurfaceComplex::find_inc(std::size_t v) {
  while (inc_parent_[v] != v) v = inc_parent_[v] = inc_parent_[inc_parent_[v]];
  return v;
}

void SurfaceComplex::glue(SlotRef a, SlotRef b, bool reversed) {
  check_slot(a);
  check_slot(b);
  if (a == b) throw Error(ErrorCode::SelfSlot, "cannot glue a slot to itself", Stage::Assembly);
  if (faces_[a.face].pair[a.index] || faces_[b.face].pair[b.index])
    throw Error(ErrorCode::SlotAlreadyPaired, "slot already paired", Stage::Assembly);
  faces_[a.face].pair[a.index] = Pairing{b, reversed};
  faces_[b.face].pair[b.index] = Pairing{a, reversed};
  glue_log_.push_back({a, Pairing{b, reversed}});

  const std::size_t a0 = corner(a.face, a.index), a1 = corner(a.face, a.index + 1);
  const std::size_t b0 = corner(b.face, b.index), b1 = corner(b.face, b.index + 1);
  auto merge = [&](std::size_t x, std::size_t y) {
    x = find_inc(x);
    y = find_inc(y);
    if (x != y) {
      inc_parent_[x] = y;
      --inc_vertices_;
    }
  };
  merge(a0, reversed ? b1 : b0);
  merge(a1, reversed ? b0 : b1);
  --inc_edges_;
}

void SurfaceComplex::set_tag(SlotRef s, BoundaryTag tag) {
  check_slot(s);
  faces_[s.face].tags[s.index] = std::move(tag);
}

std::size_t SurfaceComplex::append(const SurfaceComplex& other) {
  const std::size_t offset = faces_.size();
  for (const auto& f : other.faces_) {
    const std::size_t id = add_face(f.size);
    faces_[id].tags = f.tags;
  }
  for (const auto& [a, p] : other.glue_log_)
    glue({a.face + offset, a.index}, {p.other.face + offset, p.other.index}, p.reversed);
  return offset;
}

bool SurfaceComplex::is_free(SlotRef s) const {
  check_slot(s);
  return !faces_[s.face].pair[s.index].has_value();
}

const BoundaryTag& SurfaceComplex::tag(SlotRef s) const {
  check_slot(s);
  return faces_[s.face].tags[s.index];
}

std::int64_t SurfaceComplex::euler_characteristic() const {
  std::size_t corners = 0, slots = 0;
  for (const auto& f : faces_) {
    corners += f.size;
    slots += f.size;
  }
  UnionFind uf(corners);
  for (const auto& [a, p] : glue_log_) {
    const SlotRef& b = p.other;
    uf.unite(corner(a.face, a.index), corner(b.face, p.reversed ? b.index + 1 : b.index));
    uf.unite(corner(a.face, a.index + 1), corner(b.face, p.reversed ? b.index : b.index + 1));
  }
  std::size_t vertices = 0;
  for (std::size_t v = 0; v < corners; ++v)
    if (uf.find(v) == v) ++vertices;
  const std::size_t edges = slots - glue_log_.size();
  return static_cast<std::int64_t>(vertices) - static_cast<std::int64_t>(edges) +
         static_cast<std::int64_t>(faces_.size());
}

std::vector<std::vector<std::size_t>> SurfaceComplex::components() const {
  UnionFind uf(faces_.size());
  for (const auto& [a, p] : glue_log_) uf.unite(a.face, p.other.face);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::int64_t> slot(faces_.size(), -1);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const std::size_t root = uf.find(f);
    if (slot[root] < 0) {
      slot[root] = static_cast<std::int64_t>(out.size());
      out.emplace_back();
    }
    out[static_cast<std::size_t>(slot[root])].push_back(f);
  }
  return out;
}

std::vector<std::int8_t> SurfaceComplex::face_orientation(std::vector<bool>* orientable_by_face) const {
  std::vector<std::int8_t> orient(faces_.size(), 0);
  std::vector<bool> ok(faces_.size(), true);
  for (const auto& comp : components()) {
    bool comp_ok = true;
    std::vector<std::size_t> stack{comp.front()};
    orient[comp.front()] = 1;
    while (!stack.empty()) {
      const std::size_t f = stack.back();
      stack.pop_back();
      for (const auto& p : faces_[f].pair) {
        if (!p) continue;
        const std::int8_t want = p->reversed ? orient[f] : static_cast<std::int8_t>(-orient[f]);
        std::int8_t& o = orient[p->other.face];
        if (o == 0) {
          o = want;
          stack.push_back(p->other.face);
        } else if (o != want) {
          comp_ok = false;
        }
      }
    }
    for (std::size_t f : comp) ok[f] = comp_ok;
  }
  if (orientable_by_face) *orientable_by_face = std::move(ok);
  return orient;
}

bool SurfaceComplex::orientable() const {
  std::vector<bool> ok;
  face_orientation(&ok);
  for (bool b : ok)
    if (!b) return false;
  return true;
}

std::vector<BoundaryCycle> SurfaceComplex::boundary_cycles() const {
  std::vector<std::vector<bool>> seen(faces_.size());
  for (std::size_t f = 0; f < faces_.size(); ++f) seen[f].assign(faces_[f].size, false);
  const auto comps = components();
  std::vector<std::size_t> comp_of(faces_.size());
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (std::size_t f : comps[c]) comp_of[f] = c;

  std::vector<BoundaryCycle> out;
  for (std::size_t f = 0; f < faces_.size(); ++f)
    for (std::size_t i = 0; i < faces_[f].size; ++i) {
      if (faces_[f].pair[i] || seen[f][i]) continue;
      BoundaryCycle cyc;
      cyc.component = comp_of[f];
      bool first = true;
      SlotRef cur{f, i};
      int dir = 1;
      while (!seen[cur.face][cur.index]) {
        seen[cur.face][cur.index] = true;
        const BoundaryTag& t = faces_[cur.face].tags[cur.index];
        if (first) {
          cyc.kind = t.kind;
          first = false;
        } else if (cyc.kind != t.kind) {
          cyc.kind = TagKind::None;
        }
        if (dir > 0) {
          cyc.dlambda += t.dlambda;
          cyc.dmu += t.dmu;
          cyc.displacement += t.displacement;
        } else {
          cyc.dlambda -= t.dlambda;
          cyc.dmu -= t.dmu;
          cyc.displacement += -t.displacement;
        }
        cyc.steps.push_back({cur, dir});
        // rotate around the end corner until the next free slot
        std::size_t face = cur.face;
        std::size_t k = faces_[face].size;
        std::size_t next = dir > 0 ? (cur.index + 1) % k : (cur.index + k - 1) % k;
        std::size_t guard = 0;
        while (faces_[face].pair[next]) {
          const Pairing& p = *faces_[face].pair[next];
          if (!p.reversed) dir = -dir;
          face = p.other.face;
          k = faces_[face].size;
          next = dir > 0 ? (p.other.index + 1) % k : (p.other.index + k - 1) % k;
          if (++guard > 4 * glue_log_.size() + 4)
            throw Error(ErrorCode::AssemblyInvariant, "boundary rotation does not terminate", Stage::Assembly);
        }
        cur = {face, next};
      }
      out.push_back(std::move(cyc));
    }
  return out;
}

std::vector<ComponentTopology> SurfaceComplex::topology() const {
  const auto comps = components();
  std::vector<ComponentTopology> out(comps.size());
  std::vector<std::size_t> comp_of(faces_.size());
  for (std::size_t c = 0; c < comps.size(); ++c) {
    out[c].faces = comps[c];
    for (std::size_t f : comps[c]) comp_of[f] = c;
  }
  // per-component V, E, F
  std::size_t corners = 0;
  for (const auto& f : faces_) corners += f.size;
  UnionFind uf(corners);
  for (const auto& [a, p] : glue_log_) {
    const SlotRef& b = p.other;
    uf.unite(corner(a.face, a.index), corner(b.face, p.reversed ? b.index + 1 : b.index));
    uf.unite(corner(a.face, a.index + 1), corner(b.face, p.reversed ? b.index : b.index + 1));
  }
  std::vector<bool> ok;
  face_orientation(&ok);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    auto& t = out[comp_of[f]];
    t.euler += 1;
    for (std::size_t i = 0; i < faces_[f].size; ++i) {
      const std::size_t v = corner(f, i);
      if (uf.find(v) == v) t.euler += 1;
      // a glued slot is shared by two slot entries
      if (!faces_[f].pair[i]) t.euler -= 1;
    }
    if (!ok[f]) t.orientable = false;
  }
  for (const auto& [a, p] : glue_log_) out[comp_of[a.face]].euler -= 1;
  for (const auto& cyc : boundary_cycles()) out[cyc.component].boundary_count += 1;
  for (auto& t : out) {
    if (!t.orientable) continue;
    const std::int64_t twice = 2 - t.euler - static_cast<std::int64_t>(t.boundary_count);
    if (twice < 0 || twice % 2 != 0)
      throw Error(ErrorCode::AssemblyInvariant,
                  "orientable component with chi=" + std::to_string(t.euler) + " and b=" +
                      std::to_string(t.boundary_count) + " is not a surface",
                  Stage::Assembly);
    t.genus = twice / 2;
  }
  return out;
}

std::int64_t SurfaceComplex::genus(std::size_t face) const {
  for (const auto& t : topology())
    for (std::size_t f : t.faces)
      if (f == face) {
        if (!t.genus) throw Error(ErrorCode::GenusOfNonorientable, "component is not orientable", Stage::Assembly);
        return *t.genus;
      }
  throw Error(ErrorCode::InvalidFace, "no face " + std::to_string(face), Stage::Assembly);
}

}  // namespace seifert
