#include "seifert/builder.hpp"

#include "seifert/error.hpp"
#include "seifert/verify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

namespace seifert {

namespace {

constexpr std::int64_t kMaxWalls = 512;
constexpr std::int64_t kMaxSheets = 1024;
constexpr std::size_t kMaxFaces = 2'000'000;

[[noreturn]] void invariant(const std::string& msg) {
  throw Error(ErrorCode::AssemblyInvariant, msg, Stage::Assembly);
}

int sgn(std::int64_t v) { return (v > 0) - (v < 0); }

Rational frac_of(const Rational& v) { return frac(v); }

TorusClass to_class(const Vec2& v, const char* what) {
  if (v.x.get_den() != 1 || v.y.get_den() != 1) invariant(std::string(what) + " has a non-integral class");
  return {to_int64(v.x.get_num()), to_int64(v.y.get_num())};
}

// Closed intervals on R/Z, stored inside [0,1).
struct Forbidden {
  std::vector<std::pair<Rational, Rational>> parts;
  bool everything = false;

  void add(Rational lo, Rational hi) {
    if (hi - lo >= 1) {
      everything = true;
      return;
    }
    const Rational shift(floor_z(lo));
    lo -= shift;
    hi -= shift;
    if (hi >= 1) {
      parts.push_back({lo, Rational(1)});
      parts.push_back({Rational(0), hi - 1});
    } else {
      parts.push_back({lo, hi});
    }
  }

  // Open gaps (lo, hi) with hi possibly above 1 for the wrap-around gap.
  std::vector<std::pair<Rational, Rational>> gaps() {
    std::vector<std::pair<Rational, Rational>> out;
    if (everything) return out;
    if (parts.empty()) {
      out.push_back({Rational(0), Rational(1)});
      return out;
    }
    std::sort(parts.begin(), parts.end());
    std::vector<std::pair<Rational, Rational>> merged;
    for (const auto& p : parts) {
      if (!merged.empty() && p.first <= merged.back().second)
        merged.back().second = std::max(merged.back().second, p.second);
      else
        merged.push_back(p);
    }
    for (std::size_t i = 0; i + 1 < merged.size(); ++i)
      if (merged[i].second < merged[i + 1].first) out.push_back({merged[i].second, merged[i + 1].first});
    const Rational wrap_hi = merged.front().first + 1;
    if (merged.back().second < wrap_hi) out.push_back({merged.back().second, wrap_hi});
    return out;
  }
};

}  // namespace

bool SeifertReport::all_pass() const {
  return !verdicts.empty() && std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
}

Placement plan_placement(const SmoothingResult& L, std::int64_t c_mu1, std::int64_t r, std::uint64_t seed) {
  if (std::abs(c_mu1) > kMaxWalls)
    throw Error(ErrorCode::ResourceLimit, "|c_mu1| = " + std::to_string(c_mu1) + " exceeds the wall limit",
                Stage::Placement);
  Placement plan;
  plan.seed = seed;
  plan.ball_radius = L.cut;
  plan.eps_parallel = Rational(1, 16 * std::max<std::int64_t>(r, 1));
  plan.system_x0 = Rational(1, 89);
  const std::size_t m = static_cast<std::size_t>(std::abs(c_mu1));
  if (m == 0) return plan;

  Forbidden forbid;
  for (std::size_t i = 0; i < L.components.size(); ++i) {
    const PLCycle& c = L.components[i];
    for (std::size_t e = 0; e < c.size(); ++e) {
      forbid.add(c.vertex(e).y, c.vertex(e).y);
      if (L.provenance[i][e].corner) {
        const Rational y0 = c.vertex(e).y, y1 = y0 + c.edge_vector(e).y;
        forbid.add(std::min(y0, y1), std::max(y0, y1));
      }
    }
  }
  auto gaps = forbid.gaps();
  if (gaps.empty())
    throw Error(ErrorCode::PlacementFailure, "no mu1 height avoids the crossing neighbourhoods", Stage::Placement);
  std::size_t pick = 0;
  for (std::size_t g = 1; g < gaps.size(); ++g)
    if (gaps[g].second - gaps[g].first > gaps[pick].second - gaps[pick].first) pick = g;
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    pick = std::uniform_int_distribution<std::size_t>(0, gaps.size() - 1)(rng);
  }
  const Rational lo = gaps[pick].first;
  const Rational len = gaps[pick].second - gaps[pick].first;
  const Rational step = len / Rational(static_cast<long>(m) + 1);
  plan.offset = step / 4;
  for (std::size_t j = 0; j < m; ++j) {
    const Rational h = lo + step * Rational(static_cast<long>(j) + 1);
    plan.upper_mu1_heights.push_back(frac_of(h));
    plan.lower_heights.push_back(frac_of(h - plan.offset));
  }
  return plan;
}

UpperLink build_upper_link(const LensSpace& lens, const SmoothingResult& L, Placement& plan, std::int64_t r,
                           std::int64_t c_mu1) {
  if (r < 1 || r > kMaxSheets) throw Error(ErrorCode::ResourceLimit, "sheet count out of range", Stage::Placement);
  const int dir = -sgn(c_mu1);  // orientation of the upper system
  auto signs = [](const PLCycle& a, const PLCycle& b) {
    std::vector<int> s;
    for (const auto& ip : intersect_pair(a, b)) s.push_back(ip.sign);
    std::sort(s.begin(), s.end());
    return s;
  };

  UpperLink out;
  for (int attempt = 0;; ++attempt) {
    try {
      std::vector<PLCycle> horizontals;
      for (const auto& h : plan.upper_mu1_heights)
        horizontals.push_back(horizontal_system(dir, {h}, plan.system_x0).front());
      out.splices.clear();
      std::vector<std::vector<std::vector<int>>> reference(L.components.size());
      for (std::size_t i = 0; i < L.components.size(); ++i)
        for (std::size_t j = 0; j < horizontals.size(); ++j) {
          for (auto& ip : intersect_pair(L.components[i], horizontals[j]))
            out.splices.push_back({i, ip.a, j, ip.sign, ip.point});
          reference[i].push_back(signs(L.components[i], horizontals[j]));
        }

      MultiCurve copies;
      for (std::size_t i = 0; i < L.components.size(); ++i) {
        auto cp = parallel_copies(L.components[i], r, plan.eps_parallel);
        for (std::size_t k = 0; k < cp.size(); ++k) {
          for (std::size_t j = 0; j < horizontals.size(); ++j)
            if (signs(cp[k], horizontals[j]) != reference[i][j])
              throw Error(ErrorCode::OffsetTooLarge, "parallel copy meets the mu1-system differently");
          copies.push_back(std::move(cp[k]));
        }
      }
      require_embedded(copies);
      MultiCurve all = copies;
      all.insert(all.end(), horizontals.begin(), horizontals.end());
      out.components = oriented_smooth_all(all);
      out.parallel = std::move(copies);
      break;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Overflow || e.code() == ErrorCode::ResourceLimit ||
          e.code() == ErrorCode::AssemblyInvariant)
        throw;
      if (attempt >= 60)
        throw Error(ErrorCode::PlacementFailure, std::string("no parallel offset works: ") + e.what(),
                    Stage::Placement);
      if (e.code() == ErrorCode::IntersectionAtVertex && attempt % 2 == 0)
        plan.system_x0 = frac(plan.system_x0 + Rational(1, 97 + 2 * attempt));
      else
        plan.eps_parallel /= 2;
    }
  }
  for (const auto& c : out.components) out.kinds.push_back(classify_component(c, lens));
  return out;
}

MultiCurve build_lower_link(const Placement& plan, std::int64_t c_mu1) {
  if (c_mu1 == 0) return {};
  return horizontal_system(c_mu1, plan.lower_heights, plan.system_x0);
}

TwistBandPiece make_twist_band(std::int64_t r, int sign) {
  if (r < 1) throw Error(ErrorCode::InvalidParameters, "twist band needs r >= 1", Stage::Assembly);
  TwistBandPiece band;
  band.r = r;
  band.sign = sign;
  band.mu_contribution = -sign * r;
  const auto ur = static_cast<std::size_t>(r);
  for (std::size_t k = 0; k < ur; ++k) {
    const std::size_t f = band.fragment.add_face(4);
    band.fragment.set_tag({f, 1}, {TagKind::KnotTube, 0, -sign, {}, -1});
    band.fragment.set_tag({f, 3}, {TagKind::KnotTube, 0, 0, {}, -1});
  }
  for (std::size_t k = 0; k < ur; ++k) {
    band.c0.push_back({k, 0});
    band.sheet_permutation.push_back(ur - 1 - k);
    band.c1.push_back({ur - 1 - k, 2});
  }
  return band;
}

Cobordism assemble_cobordism(const KnotDiagram& d, const SmoothingResult& L, const UpperLink& upper,
                             const Placement& plan, std::int64_t r, std::int64_t c_mu1) {
  Cobordism out;
  SurfaceComplex& S = out.complex;
  const auto ur = static_cast<std::size_t>(r);
  const Rational mK(static_cast<long>(d.curve.size()));
  const auto& splices = upper.splices;

  std::size_t events = splices.size();
  for (const auto& p : L.provenance) events += p.size();
  if (events * (ur + 2) + static_cast<std::size_t>(std::abs(c_mu1)) > kMaxFaces)
    throw Error(ErrorCode::ResourceLimit, "surface would exceed the face limit", Stage::Assembly);

  // splice hubs
  struct Hub {
    std::size_t O = 0;
    std::vector<SlotRef> right_region, left_region;  // by sheet
  };
  std::vector<Hub> hubs(splices.size());
  for (std::size_t s = 0; s < splices.size(); ++s) {
    const int eps = splices[s].epsilon;
    Hub& h = hubs[s];
    h.O = S.add_face(8);
    S.set_tag({h.O, 0}, {TagKind::LowerLink, 0, 0, {}, -1});
    S.set_tag({h.O, 2}, {TagKind::UpperLink, 0, 0, {}, -1});
    S.set_tag({h.O, 4}, {TagKind::KnotTube, 0, -eps, {}, -1});
    S.set_tag({h.O, 6}, {TagKind::UpperLink, 0, 0, {}, -1});
    std::vector<std::size_t> M;
    for (std::size_t i = 0; i + 1 < ur; ++i) {
      M.push_back(S.add_face(4));
      S.set_tag({M.back(), 0}, {TagKind::KnotTube, 0, 0, {}, -1});
      S.set_tag({M.back(), 2}, {TagKind::UpperLink, 0, 0, {}, -1});
    }
    out.hub_faces += 1 + M.size();
    h.right_region.resize(ur);
    h.left_region.resize(ur);
    for (std::size_t i = 0; i < ur; ++i) {
      const std::size_t sheet = eps > 0 ? i : ur - 1 - i;
      h.right_region[sheet] = i + 1 == ur ? SlotRef{h.O, 3} : SlotRef{M[i], 3};
      h.left_region[sheet] = i == 0 ? SlotRef{h.O, 5} : SlotRef{M[i - 1], 1};
    }
    out.splice_mu -= eps;
  }

  // walls
  const int cs = sgn(c_mu1);
  for (std::size_t j = 0; j < plan.upper_mu1_heights.size(); ++j) {
    std::vector<std::pair<Rational, std::size_t>> on;
    for (std::size_t s = 0; s < splices.size(); ++s)
      if (splices[s].height == j) on.push_back({frac(Rational(-cs) * splices[s].point.x), s});
    std::sort(on.begin(), on.end());
    auto wall = [&](const Rational& ds) {
      const std::size_t w = S.add_face(4);
      S.set_tag({w, 0}, {TagKind::LowerLink, 0, 0, {Rational(-cs) * ds, 0}, -1});
      S.set_tag({w, 2}, {TagKind::UpperLink, 0, 0, {Rational(cs) * ds, 0}, -1});
      ++out.wall_faces;
      return w;
    };
    if (on.empty()) {
      const std::size_t w = wall(Rational(1));
      S.glue({w, 1}, {w, 3});
      continue;
    }
    for (std::size_t i = 0; i < on.size(); ++i) {
      const std::size_t next = (i + 1) % on.size();
      Rational ds = on[next].first - on[i].first;
      if (ds <= 0) ds += 1;
      const std::size_t w = wall(ds);
      S.glue({w, 3}, {hubs[on[i].second].O, 1});
      S.glue({w, 1}, {hubs[on[next].second].O, 7});
    }
  }

  // sheets
  struct Event {
    bool corner = false;
    std::size_t edge = 0;
    Rational t;
    std::size_t splice = 0;
  };
  // G faces per (crossing, entry strand), by sheet
  std::map<std::pair<std::size_t, int>, std::vector<std::size_t>> corner_faces;
  for (std::size_t i = 0; i < L.components.size(); ++i) {
    const PLCycle& c = L.components[i];
    const auto& prov = L.provenance[i];
    const std::size_t n = c.size();
    std::vector<Event> ev;
    for (std::size_t e = 0; e < n; ++e) {
      if (prov[e].corner) {
        ev.push_back({true, e, 0, 0});
        continue;
      }
      std::vector<std::pair<Rational, std::size_t>> here;
      for (std::size_t s = 0; s < splices.size(); ++s)
        if (splices[s].component == i && splices[s].at.edge == e) here.push_back({splices[s].at.t, s});
      std::sort(here.begin(), here.end());
      for (const auto& [t, s] : here) ev.push_back({false, e, t, s});
    }

    // K-parameter length and displacement of L between global parameters g0 < g1
    auto accumulate = [&](Rational g0, Rational g1) {
      Rational klen;
      Vec2 disp;
      const Rational N(static_cast<long>(n));
      for (Rational base(floor_z(g0)); base < g1; base += 1) {
        const Rational top = base + 1;
        const Rational lo = std::max(g0, base), hi = std::min(g1, top);
        if (hi <= lo) continue;
        const std::size_t e = static_cast<std::size_t>(to_int64(Rational(base >= N ? base - N : base).get_num()));
        if (prov[e].corner) invariant("sheet arc runs over a corner");
        klen += (hi - lo) * (prov[e].t_to - prov[e].t_from);
        disp += (hi - lo) * c.edge_vector(e);
      }
      return std::make_pair(klen, disp);
    };

    if (ev.empty()) {
      const auto [klen, disp] = accumulate(Rational(0), Rational(static_cast<long>(n)));
      for (std::size_t k = 0; k < ur; ++k) {
        const std::size_t f = S.add_face(4);
        S.set_tag({f, 0}, {TagKind::KnotTube, klen / mK, 0, {}, static_cast<std::int64_t>(i)});
        S.set_tag({f, 2}, {TagKind::UpperLink, 0, 0, -disp, static_cast<std::int64_t>(i)});
        S.glue({f, 1}, {f, 3});
        ++out.sheet_faces;
      }
      continue;
    }

    auto start_of = [&](const Event& e) {
      return e.corner ? Rational(static_cast<long>(e.edge)) : Rational(static_cast<long>(e.edge)) + e.t;
    };
    auto end_of = [&](const Event& e) {
      return e.corner ? Rational(static_cast<long>(e.edge) + 1) : Rational(static_cast<long>(e.edge)) + e.t;
    };
    std::vector<std::pair<Rational, Vec2>> arcs;
    for (std::size_t j = 0; j < ev.size(); ++j) {
      const Rational g0 = end_of(ev[j]);
      Rational g1 = start_of(ev[(j + 1) % ev.size()]);
      if (g1 < g0 || (ev.size() == 1 && g1 == g0)) g1 += Rational(static_cast<long>(n));
      if (g1 == g0) invariant("empty sheet arc between events");
      arcs.push_back(accumulate(g0, g1));
    }

    for (std::size_t k = 0; k < ur; ++k) {
      std::vector<std::size_t> sq(ev.size()), G(ev.size());
      for (std::size_t j = 0; j < ev.size(); ++j) {
        sq[j] = S.add_face(4);
        S.set_tag({sq[j], 0}, {TagKind::KnotTube, arcs[j].first / mK, 0, {}, static_cast<std::int64_t>(i)});
        S.set_tag({sq[j], 2}, {TagKind::UpperLink, 0, 0, -arcs[j].second, static_cast<std::int64_t>(i)});
        ++out.sheet_faces;
        if (ev[j].corner) {
          G[j] = S.add_face(4);
          S.set_tag({G[j], 2}, {TagKind::UpperLink, 0, 0, -c.edge_vector(ev[j].edge), static_cast<std::int64_t>(i)});
          ++out.sheet_faces;
          const auto& pv = prov[ev[j].edge];
          auto& slot = corner_faces[{pv.crossing, pv.entry_strand}];
          if (slot.empty()) slot.resize(ur, SIZE_MAX);
          slot[k] = G[j];
        }
      }
      for (std::size_t j = 0; j < ev.size(); ++j) {
        const std::size_t before = (j + ev.size() - 1) % ev.size();  // arc ending at event j
        if (ev[j].corner) {
          S.glue({sq[before], 1}, {G[j], 3});
          S.glue({G[j], 1}, {sq[j], 3});
        } else {
          const Hub& h = hubs[ev[j].splice];
          S.glue({sq[before], 1}, h.right_region[k]);
          S.glue(h.left_region[k], {sq[j], 3});
        }
      }
    }
  }

  // r-cover half-twist bands
  const Rational band_len = 2 * L.cut / mK;
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    const Crossing& cr = d.crossings[x];
    const int over_entry = cr.over == Over::Earlier ? 0 : 1;
    const auto A0 = corner_faces.find({x, over_entry});
    const auto A1 = corner_faces.find({x, 1 - over_entry});
    if (A0 == corner_faces.end() || A1 == corner_faces.end()) invariant("crossing without both corners");
    const TwistBandPiece band = make_twist_band(r, cr.sign);
    const std::size_t off = S.append(band.fragment);
    for (std::size_t k = 0; k < ur; ++k) {
      const std::size_t f = off + k;
      S.set_tag({f, 1}, {TagKind::KnotTube, band_len, band.fragment.tag({k, 1}).dmu, {}, -1});
      S.set_tag({f, 3}, {TagKind::KnotTube, band_len, 0, {}, -1});
      out.twist_mu += band.fragment.tag({k, 1}).dmu;
      S.glue({off + band.c0[k].face, band.c0[k].index}, {A0->second[k], 0});
      S.glue({off + band.c1[k].face, band.c1[k].index}, {A1->second[band.sheet_permutation[k]], 0});
    }
    out.band_faces += ur;
  }
  return out;
}

namespace {

void cap_disk(SurfaceComplex& s, const BoundaryCycle& cyc) {
  const std::size_t k = cyc.steps.size();
  const std::size_t f = s.add_face(k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto& st = cyc.steps[k - 1 - j];
    s.glue({f, j}, st.slot, st.direction == 1);
  }
}

void cap_annulus(SurfaceComplex& s, const BoundaryCycle& a, const BoundaryCycle& b) {
  const std::size_t ka = a.steps.size(), kb = b.steps.size();
  const std::size_t f = s.add_face(ka + kb + 2);
  for (std::size_t j = 0; j < ka; ++j) {
    const auto& st = a.steps[ka - 1 - j];
    s.glue({f, j}, st.slot, st.direction == 1);
  }
  for (std::size_t j = 0; j < kb; ++j) {
    const auto& st = b.steps[kb - 1 - j];
    s.glue({f, ka + 1 + j}, st.slot, st.direction == 1);
  }
  s.glue({f, ka}, {f, ka + kb + 1}, true);
}

}  // namespace

CapSummary cap_all(SurfaceComplex& s, const LensSpace& lens) {
  CapSummary out;
  const auto cycles = s.boundary_cycles();
  std::vector<std::pair<TorusClass, std::size_t>> open;
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const auto& cyc = cycles[i];
    switch (cyc.kind) {
      case TagKind::KnotTube: break;
      case TagKind::LowerLink: {
        const TorusClass cls = to_class(cyc.displacement, "lower boundary cycle");
        if (cls != TorusClass{1, 0} && cls != TorusClass{-1, 0}) invariant("lower boundary cycle is not a mu1 curve");
        cap_disk(s, cyc);
        ++out.lower_disks;
        break;
      }
      case TagKind::UpperLink: {
        const TorusClass cls = to_class(cyc.displacement, "upper boundary cycle");
        const ComponentKind kind = classify_class(cls, lens);
        if (std::holds_alternative<NullHomologous>(kind)) {
          cap_disk(s, cyc);
          ++out.null_disks;
        } else if (std::holds_alternative<Mu2Type>(kind)) {
          cap_disk(s, cyc);
          ++out.mu2_disks;
        } else {
          open.push_back({cls, i});
        }
        break;
      }
      default: invariant("boundary cycle mixes tube, link and seam edges");
    }
  }
  std::vector<bool> used(open.size(), false);
  for (std::size_t i = 0; i < open.size(); ++i) {
    if (used[i]) continue;
    std::size_t j = i + 1;
    while (j < open.size() && (used[j] || open[j].first != -open[i].first)) ++j;
    if (j == open.size())
      throw Error(ErrorCode::UncappableComponents,
                  "upper component of class (" + std::to_string(open[i].first.x) + "," +
                      std::to_string(open[i].first.y) + ") has no opposite partner",
                  Stage::Capping);
    used[i] = used[j] = true;
    cap_annulus(s, cycles[open[i].second], cycles[open[j].second]);
    ++out.annuli;
  }
  return out;
}

std::vector<std::size_t> nesting_depths(const MultiCurve& m) {
  struct Lift {
    std::vector<Vec2> pts;
    Rational xmin, xmax, ymin, ymax;
  };
  std::vector<std::size_t> nulls;
  std::vector<Lift> lifts;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (!m[i].homology_class().is_zero()) continue;
    nulls.push_back(i);
    Lift l;
    Vec2 p = m[i].vertex(0);
    l.xmin = l.xmax = p.x;
    l.ymin = l.ymax = p.y;
    for (std::size_t e = 0; e < m[i].size(); ++e) {
      l.pts.push_back(p);
      p += m[i].edge_vector(e);
      l.xmin = std::min(l.xmin, p.x);
      l.xmax = std::max(l.xmax, p.x);
      l.ymin = std::min(l.ymin, p.y);
      l.ymax = std::max(l.ymax, p.y);
    }
    lifts.push_back(std::move(l));
  }
  auto winding = [](const std::vector<Vec2>& poly, const Vec2& q) {
    int w = 0;
    for (std::size_t k = 0; k < poly.size(); ++k) {
      const Vec2& a = poly[k];
      const Vec2& b = poly[(k + 1) % poly.size()];
      const Rational side = cross(b - a, q - a);
      if (a.y <= q.y && q.y < b.y && side > 0) ++w;
      if (b.y <= q.y && q.y < a.y && side < 0) --w;
    }
    return w;
  };
  std::vector<std::size_t> depth;
  for (std::size_t i = 0; i < nulls.size(); ++i) {
    const Vec2 q = m[nulls[i]].vertex(0);
    std::size_t dpt = 0;
    for (std::size_t j = 0; j < nulls.size(); ++j) {
      if (i == j) continue;
      const Lift& l = lifts[j];
      bool inside = false;
      for (std::int64_t tx = to_int64(floor_z(l.xmin)) - 1; !inside && Rational(tx) <= l.xmax; ++tx)
        for (std::int64_t ty = to_int64(floor_z(l.ymin)) - 1; !inside && Rational(ty) <= l.ymax; ++ty)
          inside = winding(l.pts, q + Vec2{Rational(tx), Rational(ty)}) != 0;
      if (inside) ++dpt;
    }
    depth.push_back(dpt);
  }
  return depth;
}

namespace {

template <class F>
auto staged(Stage stage, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.stage() == Stage::Geometry) throw Error(e.code(), e.what(), stage);
    throw;
  }
}

}  // namespace

SeifertReport build(const KnotDiagram& input, const BuildOptions& options) {
  KnotDiagram d = input;
  if (options.writhe_sign < 0)
    for (auto& c : d.crossings) c.sign = -c.sign;

  SeifertReport rep;
  rep.lens = d.lens;
  rep.cls = d.curve.homology_class();
  rep.dec = staged(Stage::Algebra, [&] { return decompose(d.lens, rep.cls); });
  rep.writhe = writhe(d);
  rep.crossings = d.crossings.size();
  const std::int64_t r = rep.dec.r, c = rep.dec.c_mu1;
  if (r > kMaxSheets) throw Error(ErrorCode::ResourceLimit, "order r exceeds the sheet limit", Stage::Algebra);

  const SmoothingResult L = staged(Stage::Geometry, [&] { return smooth_crossings(d); });
  for (const auto& comp : L.components) rep.l_components.push_back(comp.homology_class());

  for (int attempt = 0;; ++attempt) {
    try {
      Placement plan = staged(Stage::Placement, [&] { return plan_placement(L, c, r, options.seed + attempt); });
      const UpperLink upper = staged(Stage::Placement, [&] { return build_upper_link(d.lens, L, plan, r, c); });
      const MultiCurve lower = build_lower_link(plan, c);
      Cobordism cob = staged(Stage::Assembly, [&] { return assemble_cobordism(d, L, upper, plan, r, c); });

      SeifertReport next = rep;
      next.placement = plan;
      next.l_plus_classes.clear();
      for (std::size_t i = 0; i < upper.components.size(); ++i) {
        next.l_plus_classes.push_back(upper.components[i].homology_class());
        const auto& k = upper.kinds[i];
        if (std::holds_alternative<NullHomologous>(k)) ++next.l_plus_null;
        else if (std::holds_alternative<Mu1Type>(k)) ++next.l_plus_mu1;
        else if (std::holds_alternative<Mu2Type>(k)) ++next.l_plus_mu2;
        else ++next.l_plus_other;
      }
      next.null_cap_depths = nesting_depths(upper.components);
      for (const auto& comp : lower) next.l_minus_classes.push_back(comp.homology_class());
      next.splice_count = upper.splices.size();
      for (const auto& sp : upper.splices) next.splice_sum -= sp.epsilon;
      next.twist_sum = cob.twist_mu;

      for (const auto& cyc : cob.complex.boundary_cycles()) {
        if (cyc.kind == TagKind::UpperLink) next.upper_cycle_classes.push_back(to_class(cyc.displacement, "upper cycle"));
        if (cyc.kind == TagKind::LowerLink) next.lower_cycle_classes.push_back(to_class(cyc.displacement, "lower cycle"));
      }
      next.caps = staged(Stage::Capping, [&] { return cap_all(cob.complex, d.lens); });

      const SurfaceComplex& S = cob.complex;
      next.faces = S.face_count();
      next.euler = S.euler_characteristic();
      next.euler_incremental = S.incremental_euler();
      next.orientable = S.orientable();
      const auto topo = staged(Stage::Assembly, [&] { return S.topology(); });
      next.surface_components = topo.size();
      for (const auto& t : topo)
        if (t.genus) next.genus += *t.genus;
      for (const auto& cyc : S.boundary_cycles()) {
        ++next.boundary_count;
        if (cyc.kind != TagKind::KnotTube) {
          ++next.non_tube_cycles;
          continue;
        }
        next.cycle_slopes.push_back({cyc.dlambda, cyc.dmu});
        next.slope_lambda += cyc.dlambda;
        next.slope_mu += cyc.dmu;
      }
      rep = std::move(next);
      break;
    } catch (const Error& e) {
      const bool retry = e.code() == ErrorCode::UncappableComponents || e.code() == ErrorCode::PlacementFailure;
      if (!retry || attempt >= 3) throw;
    }
  }

  rep.corollary = corollary_slope(d.lens, rep.dec, rep.writhe);
  rep.verdicts.push_back(check_corollary(rep));
  for (auto& v : check_budgets(rep)) rep.verdicts.push_back(std::move(v));
  return rep;
}

namespace {

SeifertReport failed_report(const KnotDiagram& d, const Error& e) {
  SeifertReport rep;
  rep.lens = d.lens;
  rep.cls = d.curve.homology_class();
  rep.verdicts.push_back({"build", false, "success", std::string(to_string(e.code())) + ": " + e.what(), e.stage()});
  return rep;
}

}  // namespace

std::vector<SeifertReport> build_batch(const std::vector<KnotDiagram>& ds, const BuildOptions& options) {
  std::vector<SeifertReport> out(ds.size());
  const auto n = static_cast<std::ptrdiff_t>(ds.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      out[k] = build(ds[k], options);
    } catch (const Error& e) {
      out[k] = failed_report(ds[k], e);
    }
  }
  return out;
}

std::vector<SeifertReport> build_batch_serial(const std::vector<KnotDiagram>& ds, const BuildOptions& options) {
  std::vector<SeifertReport> out;
  out.reserve(ds.size());
  for (const auto& d : ds) {
    try {
      out.push_back(build(d, options));
    } catch (const Error& e) {
      out.push_back(failed_report(d, e));
    }
  }
  return out;
}

}  // namespace seifert
