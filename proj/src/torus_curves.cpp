#include "seifert/torus_curves.hpp"

#include "seifert/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

namespace seifert {

namespace {

std::string fmt_point(const Vec2& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

Vec2 reduce(const Vec2& p) { return {frac(p.x), frac(p.y)}; }

Vec2 as_vec(TorusClass c) { return {Rational(c.x), Rational(c.y)}; }

bool in_unit(const Rational& v) { return sgn(v) >= 0 && v < 1; }

}  // namespace

PLCycle::PLCycle(std::vector<Vec2> vertices, std::vector<TorusClass> windings)
    : vertices_(std::move(vertices)), windings_(std::move(windings)) {
  if (vertices_.size() < 3) throw Error(ErrorCode::InvalidCycle, "cycle needs at least 3 vertices");
  if (vertices_.size() > kMaxCycleVertices)
    throw Error(ErrorCode::ResourceLimit, "cycle has more than " + std::to_string(kMaxCycleVertices) + " vertices");
  if (windings_.size() != vertices_.size())
    throw Error(ErrorCode::InvalidCycle, "winding count differs from vertex count");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (!in_unit(vertices_[i].x) || !in_unit(vertices_[i].y))
      throw Error(ErrorCode::InvalidCycle, "vertex " + std::to_string(i) + " outside [0,1)^2");
    if (std::abs(windings_[i].x) > kMaxEdgeWinding || std::abs(windings_[i].y) > kMaxEdgeWinding)
      throw Error(ErrorCode::ResourceLimit, "winding of edge " + std::to_string(i) + " exceeds the supported range");
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (edge_vector(i).is_zero()) throw Error(ErrorCode::InvalidCycle, "edge " + std::to_string(i) + " is degenerate");
}

PLCycle PLCycle::from_displacements(const Vec2& start, const std::vector<Vec2>& displacements) {
  std::vector<Vec2> vertices;
  std::vector<TorusClass> windings;
  vertices.reserve(displacements.size());
  Vec2 p = start;
  for (const auto& d : displacements) {
    vertices.push_back(reduce(p));
    Vec2 next = p + d;
    windings.push_back({to_int64(floor_z(next.x) - floor_z(p.x)), to_int64(floor_z(next.y) - floor_z(p.y))});
    p = std::move(next);
  }
  if (!vertices.empty() && reduce(p) != vertices.front())
    throw Error(ErrorCode::InvalidCycle, "displacements do not close up on the torus");
  return PLCycle(std::move(vertices), std::move(windings));
}

Vec2 PLCycle::edge_vector(std::size_t i) const {
  const std::size_t j = (i + 1) % vertices_.size();
  return vertices_[j] + as_vec(windings_[i]) - vertices_[i];
}

Vec2 PLCycle::point_at(std::size_t i, const Rational& t) const { return vertices_[i] + t * edge_vector(i); }

TorusClass PLCycle::homology_class() const {
  TorusClass sum;
  for (const auto& w : windings_) sum = sum + w;
  return sum;
}

PLCycle PLCycle::reversed() const {
  const std::size_t n = size();
  std::vector<Vec2> disp;
  disp.reserve(n);
  for (std::size_t k = 0; k < n; ++k) disp.push_back(-edge_vector(n - 1 - k));
  return from_displacements(vertices_[0], disp);
}

PLCycle PLCycle::rotated(std::size_t k) const {
  const std::size_t n = size();
  std::vector<Vec2> v;
  std::vector<TorusClass> w;
  for (std::size_t i = 0; i < n; ++i) {
    v.push_back(vertices_[(i + k) % n]);
    w.push_back(windings_[(i + k) % n]);
  }
  return PLCycle(std::move(v), std::move(w));
}

bool operator<(const EdgeLocation& a, const EdgeLocation& b) {
  if (a.edge != b.edge) return a.edge < b.edge;
  return a.t < b.t;
}

TorusClass homology_class(const PLCycle& c) { return c.homology_class(); }

TorusClass homology_class(const MultiCurve& m) {
  TorusClass sum;
  for (const auto& c : m) sum = sum + c.homology_class();
  return sum;
}

// ---------------------------------------------------------------------------
// Contact kernel

namespace detail {

namespace {

struct EdgeBox {
  Vec2 start;
  Vec2 dir;
  double lo_x, hi_x, lo_y, hi_y;
};

std::vector<EdgeBox> boxes(const PLCycle& c) {
  std::vector<EdgeBox> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    EdgeBox b{c.vertex(i), c.edge_vector(i), 0, 0, 0, 0};
    const double x0 = to_double(b.start.x), y0 = to_double(b.start.y);
    const double x1 = x0 + to_double(b.dir.x), y1 = y0 + to_double(b.dir.y);
    b.lo_x = std::min(x0, x1);
    b.hi_x = std::max(x0, x1);
    b.lo_y = std::min(y0, y1);
    b.hi_y = std::max(y0, y1);
    out.push_back(std::move(b));
  }
  return out;
}

// Exact contact of P + s d and Q + t e for s,t in [0,1].
bool segment_contact(const Vec2& p, const Vec2& d, const Vec2& q, const Vec2& e, Contact& out) {
  const Vec2 w = q - p;
  const Rational den = cross(d, e);
  if (sgn(den) != 0) {
    Rational s = cross(w, e) / den;
    Rational t = cross(w, d) / den;
    if (sgn(s) < 0 || s > 1 || sgn(t) < 0 || t > 1) return false;
    out.s = std::move(s);
    out.t = std::move(t);
    out.overlap = false;
    return true;
  }
  if (sgn(cross(w, d)) != 0) return false;
  const Rational dd = dot(d, d);
  Rational t0 = dot(w, d) / dd;
  Rational t1 = dot(w + e, d) / dd;
  if (t1 < t0) std::swap(t0, t1);
  Rational lo = t0 < 0 ? Rational(0) : t0;
  Rational hi = t1 > 1 ? Rational(1) : t1;
  if (lo > hi) return false;
  out.overlap = lo < hi;
  out.s = lo;
  out.t = dot(p + lo * d - q, e) / dot(e, e);
  return true;
}

bool lex_positive(const TorusClass& t) { return t.x > 0 || (t.x == 0 && t.y > 0); }

void contacts_for_edge(std::size_t i, const std::vector<EdgeBox>& ea, const std::vector<EdgeBox>& eb, bool same,
                       std::vector<Contact>& out) {
  const EdgeBox& a = ea[i];
  for (std::size_t j = same ? i : 0; j < eb.size(); ++j) {
    const EdgeBox& b = eb[j];
    const auto tx_lo = static_cast<std::int64_t>(std::floor(a.lo_x - b.hi_x)) - 1;
    const auto tx_hi = static_cast<std::int64_t>(std::ceil(a.hi_x - b.lo_x)) + 1;
    const auto ty_lo = static_cast<std::int64_t>(std::floor(a.lo_y - b.hi_y)) - 1;
    const auto ty_hi = static_cast<std::int64_t>(std::ceil(a.hi_y - b.lo_y)) + 1;
    for (std::int64_t tx = tx_lo; tx <= tx_hi; ++tx) {
      if (b.hi_x + tx < a.lo_x - 1e-9 || b.lo_x + tx > a.hi_x + 1e-9) continue;
      for (std::int64_t ty = ty_lo; ty <= ty_hi; ++ty) {
        if (b.hi_y + ty < a.lo_y - 1e-9 || b.lo_y + ty > a.hi_y + 1e-9) continue;
        const TorusClass shift{tx, ty};
        if (same && i == j && !lex_positive(shift)) continue;
        Contact c;
        if (segment_contact(a.start, a.dir, b.start + as_vec(shift), b.dir, c)) {
          c.i = i;
          c.j = j;
          c.shift = shift;
          out.push_back(std::move(c));
        }
      }
    }
  }
}

}  // namespace

std::vector<Contact> enumerate_contacts_serial(const PLCycle& a, const PLCycle& b, bool same) {
  const auto ea = boxes(a);
  const auto eb = same ? ea : boxes(b);
  std::vector<Contact> out;
  for (std::size_t i = 0; i < ea.size(); ++i) contacts_for_edge(i, ea, eb, same, out);
  return out;
}

std::vector<Contact> enumerate_contacts_parallel(const PLCycle& a, const PLCycle& b, bool same) {
  const auto ea = boxes(a);
  const auto eb = same ? ea : boxes(b);
  std::vector<std::vector<Contact>> buckets(ea.size());
  const auto n = static_cast<std::int64_t>(ea.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i) contacts_for_edge(static_cast<std::size_t>(i), ea, eb, same, buckets[i]);
  std::vector<Contact> out;
  for (auto& bucket : buckets)
    for (auto& c : bucket) out.push_back(std::move(c));
  return out;
}

}  // namespace detail

namespace {

using detail::Contact;

// Small inputs do not amortise thread start-up.
std::vector<Contact> enumerate_contacts(const PLCycle& a, const PLCycle& b, bool same) {
  if (a.size() * b.size() >= 4096) return detail::enumerate_contacts_parallel(a, b, same);
  return detail::enumerate_contacts_serial(a, b, same);
}

bool strictly_inside(const Rational& t) { return sgn(t) > 0 && t < 1; }

// Vertex `v` of cycle `c` (lift: point `x`) touches a strand with direction `e`.
// Returns true if the two edges at v lie on opposite sides of that strand.
bool passes_through(const PLCycle& c, std::size_t v, const Vec2& x, const Vec2& e) {
  const std::size_t n = c.size();
  const Vec2 before = x - c.edge_vector((v + n - 1) % n);
  const Vec2 after = x + c.edge_vector(v);
  const int s0 = sgn(cross(e, before - x));
  const int s1 = sgn(cross(e, after - x));
  return s0 != 0 && s1 != 0 && s0 != s1;
}

[[noreturn]] void throw_vertex_contact(const PLCycle& ca, const PLCycle& cb, const Contact& c) {
  const Vec2 x = ca.point_at(c.i, c.s);
  const bool a_vertex = !strictly_inside(c.s);
  const bool b_vertex = !strictly_inside(c.t);
  const std::string locus = "edges " + std::to_string(c.i) + "/" + std::to_string(c.j) + " at " + fmt_point(reduce(x));
  if (a_vertex && b_vertex) throw Error(ErrorCode::IntersectionAtVertex, "two vertices coincide: " + locus);
  bool through;
  if (a_vertex) {
    const std::size_t v = sgn(c.s) == 0 ? c.i : (c.i + 1) % ca.size();
    through = passes_through(ca, v, x, cb.edge_vector(c.j));
  } else {
    const std::size_t v = sgn(c.t) == 0 ? c.j : (c.j + 1) % cb.size();
    through = passes_through(cb, v, x, ca.edge_vector(c.i));
  }
  if (through) throw Error(ErrorCode::IntersectionAtVertex, "strand crosses through a vertex: " + locus);
  throw Error(ErrorCode::NonTransverse, "tangency at a vertex: " + locus);
}

bool point_less(const Vec2& p, const Vec2& q) { return p.x < q.x || (p.x == q.x && p.y < q.y); }

void reject_triple_points(std::vector<IntersectionPoint>& pts) {
  std::vector<const IntersectionPoint*> order;
  order.reserve(pts.size());
  for (const auto& p : pts) order.push_back(&p);
  std::sort(order.begin(), order.end(),
            [](const IntersectionPoint* a, const IntersectionPoint* b) { return point_less(a->point, b->point); });
  for (std::size_t k = 1; k < order.size(); ++k)
    if (order[k]->point == order[k - 1]->point)
      throw Error(ErrorCode::TriplePoint, "more than two strands meet at " + fmt_point(order[k]->point));
}

}  // namespace

std::vector<IntersectionPoint> self_intersections(const PLCycle& c) {
  const std::size_t n = c.size();
  std::vector<IntersectionPoint> out;
  for (const auto& k : enumerate_contacts(c, c, true)) {
    if (k.overlap)
      throw Error(ErrorCode::NonTransverse, "edges " + std::to_string(k.i) + " and " + std::to_string(k.j) + " overlap");
    if (strictly_inside(k.s) && strictly_inside(k.t)) {
      IntersectionPoint ip;
      ip.point = reduce(c.point_at(k.i, k.s));
      EdgeLocation li{k.i, k.s}, lj{k.j, k.t};
      Vec2 ti = c.edge_vector(k.i), tj = c.edge_vector(k.j);
      if (lj < li) {
        std::swap(li, lj);
        std::swap(ti, tj);
      }
      ip.a = std::move(li);
      ip.b = std::move(lj);
      ip.sign = sgn(cross(ti, tj));
      out.push_back(std::move(ip));
      continue;
    }
    const bool shared_next = k.j == (k.i + 1) % n && k.s == 1 && sgn(k.t) == 0 && k.shift == c.winding(k.i);
    const bool shared_prev = k.i == (k.j + 1) % n && sgn(k.s) == 0 && k.t == 1 && k.shift == -c.winding(k.j);
    if (shared_next || shared_prev) continue;
    throw_vertex_contact(c, c, k);
  }
  reject_triple_points(out);
  std::sort(out.begin(), out.end(), [](const IntersectionPoint& x, const IntersectionPoint& y) { return x.a < y.a; });
  return out;
}

std::vector<IntersectionPoint> intersect_pair(const PLCycle& a, const PLCycle& b) {
  std::vector<IntersectionPoint> out;
  for (const auto& k : enumerate_contacts(a, b, false)) {
    if (k.overlap)
      throw Error(ErrorCode::NonTransverse, "edges " + std::to_string(k.i) + " and " + std::to_string(k.j) + " overlap");
    if (!strictly_inside(k.s) || !strictly_inside(k.t)) throw_vertex_contact(a, b, k);
    IntersectionPoint ip;
    ip.point = reduce(a.point_at(k.i, k.s));
    ip.a = {k.i, k.s};
    ip.b = {k.j, k.t};
    ip.sign = sgn(cross(a.edge_vector(k.i), b.edge_vector(k.j)));
    out.push_back(std::move(ip));
  }
  reject_triple_points(out);
  std::sort(out.begin(), out.end(), [](const IntersectionPoint& x, const IntersectionPoint& y) { return x.a < y.a; });
  return out;
}

void require_embedded(const PLCycle& c) {
  const auto pts = self_intersections(c);
  if (!pts.empty())
    throw Error(ErrorCode::InvalidCycle, "curve is not embedded: double point at " + fmt_point(pts.front().point));
}

void require_embedded(const MultiCurve& m) {
  for (const auto& c : m) require_embedded(c);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const auto pts = intersect_pair(m[i], m[j]);
      if (!pts.empty())
        throw Error(ErrorCode::InvalidCycle, "components " + std::to_string(i) + " and " + std::to_string(j) +
                                                 " intersect at " + fmt_point(pts.front().point));
    }
}

// ---------------------------------------------------------------------------

MultiCurve parallel_copies(const PLCycle& c, std::int64_t r, const Rational& eps) {
  if (r < 1) throw Error(ErrorCode::InvalidParameters, "parallel_copies needs r >= 1");
  if (sgn(eps) <= 0) throw Error(ErrorCode::InvalidParameters, "parallel_copies needs eps > 0");
  const std::size_t n = c.size();
  std::vector<Vec2> dir(n), normal(n);
  for (std::size_t i = 0; i < n; ++i) {
    dir[i] = c.edge_vector(i);
    const Rational l1 = abs(dir[i].x) + abs(dir[i].y);
    normal[i] = {-dir[i].y / l1, dir[i].x / l1};
  }
  MultiCurve copies;
  for (std::int64_t k = 1; k <= r; ++k) {
    const Rational delta = eps * k;
    std::vector<Vec2> offset(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t h = (i + n - 1) % n;
      const Rational den = cross(dir[h], dir[i]);
      if (sgn(den) == 0) {
        if (sgn(dot(dir[h], dir[i])) < 0) throw Error(ErrorCode::OffsetTooLarge, "curve backtracks at a vertex");
        offset[i] = delta * normal[i];
      } else {
        const Vec2 u = delta * (normal[i] - normal[h]);
        const Rational s = cross(u, dir[i]) / den;
        offset[i] = delta * normal[h] + s * dir[h];
      }
    }
    std::vector<Vec2> disp(n);
    for (std::size_t i = 0; i < n; ++i) {
      disp[i] = dir[i] + offset[(i + 1) % n] - offset[i];
      if (sgn(dot(disp[i], dir[i])) <= 0)
        throw Error(ErrorCode::OffsetTooLarge, "offset inverts edge " + std::to_string(i));
    }
    copies.push_back(PLCycle::from_displacements(c.vertex(0) + offset[0], disp));
  }
  MultiCurve all = copies;
  all.push_back(c);
  try {
    require_embedded(all);
  } catch (const Error& e) {
    throw Error(ErrorCode::OffsetTooLarge, std::string("parallel copies are not disjoint: ") + e.what());
  }
  return copies;
}

MultiCurve horizontal_system(std::int64_t count, const std::vector<Rational>& heights, const Rational& x0) {
  if (!in_unit(x0)) throw Error(ErrorCode::InvalidParameters, "start abscissa outside [0,1)");
  if (static_cast<std::int64_t>(heights.size()) != std::abs(count))
    throw Error(ErrorCode::InvalidParameters, "need exactly |count| heights");
  for (std::size_t i = 0; i < heights.size(); ++i) {
    if (!in_unit(heights[i])) throw Error(ErrorCode::InvalidParameters, "height outside [0,1)");
    for (std::size_t j = 0; j < i; ++j)
      if (heights[i] == heights[j]) throw Error(ErrorCode::DuplicateHeights, "duplicate height " + to_string(heights[i]));
  }
  const Rational step(count > 0 ? 1 : -1, 3);
  MultiCurve out;
  for (const auto& h : heights) out.push_back(PLCycle::from_displacements({x0, h}, {{step, 0}, {step, 0}, {step, 0}}));
  return out;
}

// ---------------------------------------------------------------------------
// Oriented smoothing

namespace {

struct Occurrence {
  std::size_t curve;
  std::size_t edge;
  Rational t;
  std::size_t crossing;
  int slot;
};

struct SmoothAttempt {
  std::vector<std::vector<Vec2>> disps;
  std::vector<Vec2> starts;
  std::vector<std::vector<SmoothedEdge>> prov;
};

SmoothAttempt trace_smoothing(const MultiCurve& curves, const std::vector<Occurrence>& occ,
                              const std::vector<std::vector<std::size_t>>& per_curve,
                              const std::vector<std::size_t>& position, const Rational& tau) {
  SmoothAttempt out;
  std::vector<bool> used(occ.size(), false);
  auto partner = [&](std::size_t o) { return o ^ 1U; };  // occurrences stored in crossing pairs
  auto next_on_curve = [&](std::size_t o) {
    const auto& list = per_curve[occ[o].curve];
    return list[(position[o] + 1) % list.size()];
  };

  for (std::size_t ci = 0; ci < curves.size(); ++ci) {
    const PLCycle& c = curves[ci];
    if (per_curve[ci].empty()) {
      std::vector<Vec2> d;
      std::vector<SmoothedEdge> p;
      for (std::size_t e = 0; e < c.size(); ++e) {
        d.push_back(c.edge_vector(e));
        SmoothedEdge se;
        se.src_curve = ci;
        se.src_edge = e;
        se.t_from = 0;
        se.t_to = 1;
        p.push_back(std::move(se));
      }
      out.starts.push_back(c.vertex(0));
      out.disps.push_back(std::move(d));
      out.prov.push_back(std::move(p));
      continue;
    }
    for (std::size_t start : per_curve[ci]) {
      if (used[start]) continue;
      std::vector<Vec2> d;
      std::vector<SmoothedEdge> p;
      const Occurrence& s0 = occ[start];
      out.starts.push_back(curves[s0.curve].point_at(s0.edge, s0.t + tau));
      std::size_t o = start;
      do {
        used[o] = true;
        // piece from exit of o to entry of the next occurrence on the same curve
        const Occurrence& from = occ[o];
        const std::size_t nxt = next_on_curve(o);
        const Occurrence& to = occ[nxt];
        const PLCycle& cc = curves[from.curve];
        auto push_piece = [&](std::size_t e, const Rational& a, const Rational& b) {
          d.push_back((b - a) * cc.edge_vector(e));
          SmoothedEdge se;
          se.src_curve = from.curve;
          se.src_edge = e;
          se.t_from = a;
          se.t_to = b;
          p.push_back(std::move(se));
        };
        const bool direct = nxt != o && to.edge == from.edge && to.t > from.t;
        if (direct) {
          push_piece(from.edge, from.t + tau, to.t - tau);
        } else {
          push_piece(from.edge, from.t + tau, 1);
          for (std::size_t e = (from.edge + 1) % cc.size(); e != to.edge; e = (e + 1) % cc.size()) push_piece(e, 0, 1);
          push_piece(to.edge, 0, to.t - tau);
        }
        // corner at the crossing of `to`
        const std::size_t exit = partner(nxt);
        const Occurrence& ex = occ[exit];
        d.push_back(tau * cc.edge_vector(to.edge) + tau * curves[ex.curve].edge_vector(ex.edge));
        SmoothedEdge corner;
        corner.corner = true;
        corner.crossing = to.crossing;
        corner.entry_strand = to.slot;
        p.push_back(std::move(corner));
        o = exit;
      } while (o != start);
      out.disps.push_back(std::move(d));
      out.prov.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace

SmoothingResult smooth_crossings_of(const MultiCurve& curves, const std::vector<CurveCrossing>& crossings) {
  std::vector<Occurrence> occ;
  occ.reserve(2 * crossings.size());
  for (std::size_t k = 0; k < crossings.size(); ++k) {
    occ.push_back({crossings[k].curve_a, crossings[k].a.edge, crossings[k].a.t, k, 0});
    occ.push_back({crossings[k].curve_b, crossings[k].b.edge, crossings[k].b.t, k, 1});
  }
  std::vector<std::vector<std::size_t>> per_curve(curves.size());
  for (std::size_t o = 0; o < occ.size(); ++o) per_curve[occ[o].curve].push_back(o);
  std::vector<std::size_t> position(occ.size());
  Rational tau(1, 8);
  for (auto& list : per_curve) {
    std::sort(list.begin(), list.end(), [&](std::size_t x, std::size_t y) {
      if (occ[x].edge != occ[y].edge) return occ[x].edge < occ[y].edge;
      return occ[x].t < occ[y].t;
    });
    for (std::size_t k = 0; k < list.size(); ++k) {
      position[list[k]] = k;
      const Occurrence& o = occ[list[k]];
      tau = std::min(tau, Rational(o.t / 4));
      tau = std::min(tau, Rational((1 - o.t) / 4));
      if (k > 0 && occ[list[k - 1]].edge == o.edge) tau = std::min(tau, Rational((o.t - occ[list[k - 1]].t) / 4));
    }
  }

  const TorusClass before = homology_class(curves);
  for (int attempt = 0;; ++attempt) {
    try {
      SmoothAttempt traced = trace_smoothing(curves, occ, per_curve, position, tau);
      SmoothingResult result;
      result.cut = tau;
      for (std::size_t k = 0; k < traced.disps.size(); ++k) {
        auto& d = traced.disps[k];
        auto& p = traced.prov[k];
        while (d.size() < 3) {
          std::size_t e = 0;
          while (p[e].corner) ++e;
          const Vec2 half = Rational(1, 2) * d[e];
          SmoothedEdge second = p[e];
          const Rational mid = (p[e].t_from + p[e].t_to) / 2;
          p[e].t_to = mid;
          second.t_from = mid;
          d[e] = half;
          d.insert(d.begin() + static_cast<std::ptrdiff_t>(e) + 1, half);
          p.insert(p.begin() + static_cast<std::ptrdiff_t>(e) + 1, std::move(second));
        }
        result.components.push_back(PLCycle::from_displacements(traced.starts[k], d));
        result.provenance.push_back(std::move(p));
      }
      if (!crossings.empty()) require_embedded(result.components);
      if (homology_class(result.components) != before)
        throw Error(ErrorCode::AssemblyInvariant, "smoothing changed the homology class", Stage::Assembly);
      return result;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::AssemblyInvariant || e.code() == ErrorCode::ResourceLimit || attempt >= 24) throw;
      tau /= 2;
    }
  }
}

MultiCurve oriented_smooth_all(const MultiCurve& m) {
  for (const auto& c : m) require_embedded(c);
  std::vector<CurveCrossing> crossings;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      for (auto& ip : intersect_pair(m[i], m[j])) crossings.push_back({i, std::move(ip.a), j, std::move(ip.b)});
  if (crossings.empty()) return m;
  return smooth_crossings_of(m, crossings).components;
}

ComponentKind classify_class(TorusClass cls, const LensSpace& lens) {
  if (cls.is_zero()) return NullHomologous{};
  if (std::gcd(std::abs(cls.x), std::abs(cls.y)) != 1)
    throw Error(ErrorCode::InvalidCycle, "embedded component with non-primitive class");
  const TorusClass mu2 = mu2_class(lens);
  if (cls == mu2) return Mu2Type{1};
  if (cls == -mu2) return Mu2Type{-1};
  if (cls == TorusClass{1, 0}) return Mu1Type{1};
  if (cls == TorusClass{-1, 0}) return Mu1Type{-1};
  return OtherType{cls};
}

ComponentKind classify_component(const PLCycle& c, const LensSpace& lens) {
  return classify_class(c.homology_class(), lens);
}

}  // namespace seifert
