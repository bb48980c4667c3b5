#include "seifert/generate.hpp"

#include "seifert/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

namespace seifert {

namespace {

Rational grid(double v, long den = 10000) {
  Rational r(static_cast<long>(std::lround(v * static_cast<double>(den))), den);
  r.canonicalize();
  return r;
}

Rational frac_of(long n, long d) {
  Rational r(n, d);
  r.canonicalize();
  return r;
}

[[noreturn]] void fail(const std::string& msg) { throw Error(ErrorCode::GenerationFailure, msg, Stage::Geometry); }

bool single_cycle(int strands, const std::vector<BraidLetter>& word) {
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (const auto& l : word) std::swap(perm[static_cast<std::size_t>(l.generator - 1)], perm[static_cast<std::size_t>(l.generator)]);
  int pos = 0, len = 0;
  do {
    pos = perm[static_cast<std::size_t>(pos)];
    ++len;
  } while (pos != 0);
  return len == strands;
}

void check_word(int strands, const std::vector<BraidLetter>& word) {
  if (strands < 1) fail("braid needs at least one strand");
  for (const auto& l : word)
    if (l.generator < 1 || l.generator >= strands || (l.sign != 1 && l.sign != -1))
      fail("bad braid letter " + std::to_string(l.generator));
  if (!single_cycle(strands, word)) fail("braid closure is not a knot");
}

// Positions of strand slots per step, following the knot through all rounds.
// Calls emit(step, from_position, to_position, letter_or_minus_one).
template <class F>
void walk_braid(int strands, const std::vector<BraidLetter>& word, std::size_t steps, F emit) {
  int pos = 0;
  for (int round = 0; round < strands; ++round)
    for (std::size_t t = 0; t < steps; ++t) {
      int next = pos;
      long letter = -1;
      if (t % 2 == 1 && t / 2 < word.size()) {
        const int g = word[t / 2].generator;
        if (pos == g - 1) next = g;
        else if (pos == g) next = g - 1;
        if (next != pos) letter = static_cast<long>(t / 2);
      }
      emit(t, pos, next, letter);
      pos = next;
    }
}

std::size_t braid_steps(std::size_t letters, std::size_t minimum) {
  return std::max(2 * letters + 2, minimum);
}

// Signs by crossing point for a braid curve: the crossing on a diagonal edge
// belongs to that edge's letter.
KnotDiagram signed_braid(const LensSpace& lens, const PLCycle& curve, const std::vector<long>& letter_of_edge,
                         const std::vector<BraidLetter>& word) {
  std::vector<IntersectionPoint> pts;
  try {
    pts = self_intersections(curve);
  } catch (const Error& e) {
    fail(std::string("braid drawing is not regular: ") + e.what());
  }
  if (pts.size() != word.size()) fail("braid drawing has the wrong number of crossings");
  std::vector<Over> over;
  for (const auto& p : pts) {
    const long letter = letter_of_edge[p.a.edge];
    if (letter < 0) fail("braid crossing off a diagonal");
    const int want = word[static_cast<std::size_t>(letter)].sign;
    over.push_back(p.sign == want ? Over::Earlier : Over::Later);
  }
  return validate_regular(lens, curve, over);
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  if (b == 0) {
    x = a >= 0 ? 1 : -1;
    y = 0;
    return a >= 0 ? a : -a;
  }
  std::int64_t x1, y1;
  const std::int64_t g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

}  // namespace

KnotDiagram diagram_with_signs(const LensSpace& lens, const PLCycle& curve,
                               const std::vector<std::pair<Vec2, int>>& signs, int fallback) {
  const auto pts = self_intersections(curve);
  std::vector<Over> over;
  for (const auto& p : pts) {
    int want = fallback;
    for (const auto& [pt, s] : signs)
      if (pt == p.point) want = s;
    over.push_back(p.sign == want ? Over::Earlier : Over::Later);
  }
  return validate_regular(lens, curve, over);
}

KnotDiagram closed_braid_in_disk(const LensSpace& lens, int strands, const std::vector<BraidLetter>& word) {
  check_word(strands, word);
  if (strands > 8) fail("at most 8 strands in a disk chart");
  const std::size_t steps = braid_steps(word.size(), 12);
  std::vector<double> radius(static_cast<std::size_t>(strands));
  for (int j = 0; j < strands; ++j)
    radius[static_cast<std::size_t>(j)] = strands == 1 ? 0.3 : 0.1 + 0.3 * j / (strands - 1);
  auto point = [&](std::size_t t, int pos) {
    const double th = 2.0 * M_PI * static_cast<double>(t % steps) / static_cast<double>(steps);
    const double r = radius[static_cast<std::size_t>(pos)];
    return Vec2{grid(0.5 + r * std::cos(th)), grid(0.5 + r * std::sin(th))};
  };
  std::vector<Vec2> verts;
  std::vector<long> letter_of_edge;
  walk_braid(strands, word, steps, [&](std::size_t t, int from, int, long letter) {
    verts.push_back(point(t, from));
    letter_of_edge.push_back(letter);
  });
  PLCycle curve(verts, std::vector<TorusClass>(verts.size(), TorusClass{0, 0}));
  return signed_braid(lens, curve, letter_of_edge, word);
}

KnotDiagram torus_braid(const LensSpace& lens, int strands, const std::vector<BraidLetter>& word, TorusClass direction) {
  check_word(strands, word);
  if (std::gcd(direction.x, direction.y) != 1) fail("braid direction must be primitive");
  if (strands > 32) fail("at most 32 torus braid strands");
  // M = [[c, a], [d, b]] with det 1 sends (0,1) to (a,b)
  const std::int64_t a = direction.x, b = direction.y;
  std::int64_t u, v;
  ext_gcd(b, a, u, v);  // u b + v a = 1
  std::int64_t c = u, d = -v;
  if (a != 0) {
    // shorten the first column
    const std::int64_t k = c / a;
    c -= k * a;
    d -= k * b;
  }
  const std::size_t steps = braid_steps(word.size(), 4);
  const Rational dy = frac_of(1, static_cast<long>(steps));
  auto x_of = [&](int pos) { return frac_of(pos + 1, strands + 1); };
  std::vector<Vec2> disps;
  std::vector<long> letter_of_edge;
  walk_braid(strands, word, steps, [&](std::size_t, int from, int to, long letter) {
    const Vec2 e{x_of(to) - x_of(from), dy};
    disps.push_back({Rational(c) * e.x + Rational(a) * e.y, Rational(d) * e.x + Rational(b) * e.y});
    letter_of_edge.push_back(letter);
  });
  const Vec2 s0{x_of(0), frac_of(1, 2 * static_cast<long>(steps))};
  const Vec2 start{Rational(c) * s0.x + Rational(a) * s0.y, Rational(d) * s0.x + Rational(b) * s0.y};
  const PLCycle curve = PLCycle::from_displacements(start, disps);
  return signed_braid(lens, curve, letter_of_edge, word);
}

KnotDiagram add_kink(const KnotDiagram& d, std::size_t edge, int sign) {
  const PLCycle& c = d.curve;
  if (edge >= c.size()) fail("no edge " + std::to_string(edge));
  std::vector<std::pair<Vec2, int>> signs;
  Rational lo(1), hi(0);
  for (const auto& x : d.crossings) {
    signs.push_back({x.geometry.point, x.sign});
    for (const auto* loc : {&x.geometry.a, &x.geometry.b})
      if (loc->edge == edge) {
        lo = std::min(lo, loc->t);
        hi = std::max(hi, loc->t);
      }
  }
  const Vec2 D = c.edge_vector(edge);
  const Vec2 N{-D.y, D.x};
  const Vec2 A = c.vertex(edge);
  const Vec2 mid = A + Rational(1, 2) * D;
  for (Rational s(1, 16); s > Rational(1, 1 << 20); s /= 2) {
    const Rational half = 2 * s;
    if (lo <= hi && !(hi < Rational(1, 2) - half || lo > Rational(1, 2) + half)) continue;
    const std::vector<Vec2> pts{mid - half * D, mid + s * (D + N), mid + half * N, mid + s * (N - D), mid + half * D};
    std::vector<Vec2> disps;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i != edge) {
        disps.push_back(c.edge_vector(i));
        continue;
      }
      Vec2 prev = A;
      for (const auto& p : pts) {
        disps.push_back(p - prev);
        prev = p;
      }
      disps.push_back(A + D - prev);
    }
    PLCycle curve;
    std::vector<IntersectionPoint> found;
    try {
      curve = PLCycle::from_displacements(c.vertex(0), disps);
      found = self_intersections(curve);
    } catch (const Error&) {
      continue;
    }
    if (found.size() != d.crossings.size() + 1) continue;
    std::size_t fresh = 0;
    for (const auto& p : found) {
      const bool old = std::any_of(signs.begin(), signs.end(), [&](const auto& e) { return e.first == p.point; });
      if (!old) {
        ++fresh;
        signs.push_back({p.point, sign});
      }
    }
    if (fresh != 1) continue;
    return diagram_with_signs(d.lens, curve, signs);
  }
  fail("no room for a kink on edge " + std::to_string(edge));
}

namespace {

std::vector<BraidLetter> random_word(std::mt19937_64& rng, int strands, std::size_t len) {
  std::uniform_int_distribution<int> gen(1, std::max(1, strands - 1));
  std::bernoulli_distribution coin(0.5);
  for (int attempt = 0; attempt < 2000; ++attempt) {
    std::vector<BraidLetter> w;
    for (std::size_t i = 0; i < len; ++i) w.push_back({gen(rng), coin(rng) ? 1 : -1});
    if (single_cycle(strands, w)) return w;
  }
  // deterministic fallback: sigma_1 ... sigma_{n-1} padded with sigma_1^{+-1} pairs
  std::vector<BraidLetter> w;
  for (int g = 1; g < strands; ++g) w.push_back({g, coin(rng) ? 1 : -1});
  while (w.size() + 2 <= len) {
    const int s = coin(rng) ? 1 : -1;
    w.push_back({1, s});
    w.push_back({1, s});
  }
  return w;
}

KnotDiagram random_walk(const LensSpace& lens, TorusClass cls, std::size_t crossings, std::mt19937_64& rng,
                        bool& ok) {
  ok = false;
  std::uniform_int_distribution<int> nverts(3, 8);
  std::uniform_int_distribution<long> u(0, 996);
  std::uniform_int_distribution<int> amp(1, 4);
  std::bernoulli_distribution coin(0.5);
  for (int attempt = 0; attempt < 60; ++attempt) {
    const int n = nverts(rng);
    const long a = amp(rng);
    std::vector<Vec2> pts;
    for (int i = 0; i < n; ++i) {
      const Vec2 base{frac_of(static_cast<long>(cls.x) * i, n), frac_of(static_cast<long>(cls.y) * i, n)};
      const Vec2 jitter{frac_of(a * (u(rng) - 498), 997 * 8), frac_of(a * (u(rng) - 498), 997 * 8)};
      pts.push_back(base + jitter + Vec2{Rational(1, 2), Rational(1, 2)});
    }
    std::vector<Vec2> disp;
    for (int i = 0; i < n; ++i) {
      const Vec2 next = i + 1 < n ? pts[static_cast<std::size_t>(i) + 1]
                                  : pts[0] + Vec2{Rational(cls.x), Rational(cls.y)};
      disp.push_back(next - pts[static_cast<std::size_t>(i)]);
    }
    try {
      const PLCycle c = PLCycle::from_displacements(pts[0], disp);
      const auto found = self_intersections(c);
      if (found.size() != crossings) continue;
      std::vector<Over> over;
      for (std::size_t k = 0; k < found.size(); ++k) over.push_back(coin(rng) ? Over::Earlier : Over::Later);
      ok = true;
      return validate_regular(lens, c, over);
    } catch (const Error&) {
      continue;
    }
  }
  return {};
}

}  // namespace

KnotDiagram random_diagram(const LensSpace& lens, TorusClass cls, std::size_t crossings, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::int64_t n = std::gcd(cls.x, cls.y);
  if (n > 32) fail("class multiplicity above 32");
  if (crossings > 64) fail("at most 64 crossings");
  if (n > 0 && static_cast<std::int64_t>(crossings) < n - 1)
    fail("class needs at least " + std::to_string(n - 1) + " crossings");
  std::bernoulli_distribution coin(0.5);

  if (coin(rng) && std::abs(cls.x) <= 4 && std::abs(cls.y) <= 4) {
    bool ok = false;
    KnotDiagram d = random_walk(lens, cls, crossings, rng, ok);
    if (ok) return d;
  }

  KnotDiagram d;
  std::size_t used = 0;
  if (n == 0) {
    std::uniform_int_distribution<int> strands_dist(1, 3);
    int strands = crossings >= 2 ? strands_dist(rng) : 1;
    std::size_t len = crossings;
    if (strands > 1 && len % 2 != static_cast<std::size_t>(strands - 1) % 2) --len;
    if (strands > 1 && len + 1 < static_cast<std::size_t>(strands)) strands = 1;
    if (strands == 1) len = 0;
    const auto w = random_word(rng, strands, len);
    d = closed_braid_in_disk(lens, strands, w);
    used = w.size();
  } else {
    const TorusClass dir{cls.x / n, cls.y / n};
    std::size_t len = crossings;
    if (len % 2 != static_cast<std::size_t>(n - 1) % 2) --len;
    const auto w = random_word(rng, static_cast<int>(n), n == 1 ? 0 : len);
    d = torus_braid(lens, static_cast<int>(n), w, dir);
    used = w.size();
  }
  while (used < crossings) {
    std::uniform_int_distribution<std::size_t> edge(0, d.curve.size() - 1);
    bool placed = false;
    for (int attempt = 0; attempt < 16 && !placed; ++attempt) {
      try {
        d = add_kink(d, edge(rng), coin(rng) ? 1 : -1);
        placed = true;
      } catch (const Error& e) {
        if (e.code() != ErrorCode::GenerationFailure) throw;
      }
    }
    if (!placed) fail("could not place a kink");
    ++used;
  }
  return d;
}

}  // namespace seifert
