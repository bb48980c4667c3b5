#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "seifert/diagram.hpp"
#include "seifert/error.hpp"
#include "seifert/generate.hpp"
#include "test_helpers.hpp"

#include <map>
#include <random>

using namespace seifert;
using seifert::testing::geodesic;
using seifert::testing::polygon;
using seifert::testing::q;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Io;
}

// Independent count of Seifert circles from the Gauss sequence of a diagram:
// walk the knot, and at each crossing jump to the other strand's outgoing arc.
std::size_t seifert_circle_count(const KnotDiagram& d) {
  struct Occ {
    EdgeLocation loc;
    std::size_t crossing;
  };
  std::vector<Occ> occ;
  for (std::size_t k = 0; k < d.crossings.size(); ++k) {
    occ.push_back({d.crossings[k].geometry.a, k});
    occ.push_back({d.crossings[k].geometry.b, k});
  }
  if (occ.empty()) return 1;
  std::sort(occ.begin(), occ.end(), [](const Occ& x, const Occ& y) { return x.loc < y.loc; });
  // arcs: arc i starts at occ i and ends at occ i+1
  const std::size_t m = occ.size();
  std::vector<bool> seen(m, false);
  std::size_t circles = 0;
  for (std::size_t s = 0; s < m; ++s) {
    if (seen[s]) continue;
    ++circles;
    std::size_t arc = s;
    while (!seen[arc]) {
      seen[arc] = true;
      const std::size_t end = (arc + 1) % m;
      // the partner occurrence at the same crossing starts the continuing arc
      for (std::size_t j = 0; j < m; ++j)
        if (j != end && occ[j].crossing == occ[end].crossing) {
          arc = j;
          break;
        }
    }
  }
  return circles;
}

KnotDiagram trefoil() {
  return closed_braid_in_disk(make_lens(1, 0), 2, {{1, 1}, {1, 1}, {1, 1}});
}

KnotDiagram figure_eight() {
  return closed_braid_in_disk(make_lens(1, 0), 3, {{1, 1}, {2, -1}, {1, 1}, {2, -1}});
}

}  // namespace

TEST_CASE("embedded curve has no crossings") {
  const auto d = validate_regular(make_lens(5, 2), geodesic(1, 0), {});
  CHECK(d.crossings.empty());
  CHECK(writhe(d) == 0);
  const auto sm = smooth_crossings(d);
  REQUIRE(sm.components.size() == 1);
  CHECK(homology_class(sm.components[0]) == TorusClass{1, 0});
}

TEST_CASE("right-handed trefoil in a disk chart") {
  const auto d = trefoil();
  CHECK(d.crossings.size() == 3);
  CHECK(writhe(d) == 3);
  CHECK(d.curve.homology_class() == TorusClass{0, 0});
  const auto sm = smooth_crossings(d);
  CHECK(sm.components.size() == 2);
  CHECK(seifert_circle_count(d) == 2);
  for (const auto& c : sm.components) CHECK(homology_class(c) == TorusClass{0, 0});
}

TEST_CASE("figure-eight has writhe zero and three Seifert circles") {
  const auto d = figure_eight();
  CHECK(d.crossings.size() == 4);
  CHECK(writhe(d) == 0);
  CHECK(smooth_crossings(d).components.size() == 3);
  CHECK(seifert_circle_count(d) == 3);
}

TEST_CASE("over tags decide the sign") {
  const auto d = trefoil();
  std::vector<Over> flipped;
  for (const auto& c : d.crossings) flipped.push_back(c.over == Over::Earlier ? Over::Later : Over::Earlier);
  CHECK(writhe(validate_regular(d.lens, d.curve, flipped)) == -3);
}

TEST_CASE("regularity errors") {
  // three chords through (1/2, 1/2)
  const auto star = polygon({{q(9, 10), q(1, 2)}, {q(1, 10), q(1, 2)}, {q(3, 10), q(1, 10)},
                             {q(7, 10), q(9, 10)}, {q(3, 10), q(9, 10)}, {q(7, 10), q(1, 10)}});
  CHECK(code_of([&] { validate_regular(make_lens(3, 1), star, {Over::Earlier, Over::Earlier}); }) ==
        ErrorCode::TriplePoint);
  try {
    validate_regular(make_lens(3, 1), star, {});
  } catch (const Error& e) {
    CHECK(e.stage() == Stage::Validation);
  }
  const auto d = trefoil();
  CHECK(code_of([&] { validate_regular(d.lens, d.curve, {Over::Earlier}); }) == ErrorCode::CrossingCountMismatch);
}

TEST_CASE("kink on an essential curve") {
  const auto base = validate_regular(make_lens(3, 1), geodesic(1, 0), {});
  const auto d = add_kink(base, 1, -1);
  CHECK(d.crossings.size() == 1);
  CHECK(writhe(d) == -1);
  CHECK(d.curve.homology_class() == TorusClass{1, 0});
  const auto sm = smooth_crossings(d);
  REQUIRE(sm.components.size() == 2);
  std::multiset<std::pair<std::int64_t, std::int64_t>> classes;
  for (const auto& c : sm.components) {
    const auto k = homology_class(c);
    classes.insert({k.x, k.y});
  }
  CHECK(classes == std::multiset<std::pair<std::int64_t, std::int64_t>>{{0, 0}, {1, 0}});
}

TEST_CASE("torus braids realise multiples of a primitive class") {
  const auto lens = make_lens(3, 1);
  const auto d = torus_braid(lens, 2, {{1, 1}}, {0, 1});
  CHECK(d.curve.homology_class() == TorusClass{0, 2});
  CHECK(d.crossings.size() == 1);
  for (TorusClass dir : {TorusClass{1, 0}, TorusClass{2, 3}, TorusClass{-3, 2}, TorusClass{1, -1}}) {
    const auto e = torus_braid(make_lens(7, 2), 3, {{1, 1}, {2, -1}, {1, -1}, {2, 1}}, dir);
    CHECK(e.curve.homology_class() == TorusClass{3 * dir.x, 3 * dir.y});
    CHECK(e.crossings.size() == 4);
    CHECK(writhe(e) == 0);
    CHECK(smooth_crossings(e).components.size() == 3);
  }
}

TEST_CASE("random diagrams: properties") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-3, 3), cross(0, 6);
  for (int trial = 0; trial < 120; ++trial) {
    TorusClass cls{coord(rng), coord(rng)};
    const std::int64_t n = std::gcd(cls.x, cls.y);
    std::size_t k = static_cast<std::size_t>(cross(rng));
    if (n > 0 && static_cast<std::int64_t>(k) < n - 1) k = static_cast<std::size_t>(n - 1);
    const auto d = random_diagram(make_lens(5, 2), cls, k, 1000 + trial);
    CAPTURE(trial);
    CHECK(d.curve.homology_class() == cls);
    CHECK(d.crossings.size() == k);
    CHECK(random_diagram(make_lens(5, 2), cls, k, 1000 + trial).curve == d.curve);

    const auto sm = smooth_crossings(d);
    CHECK(homology_class(sm.components) == cls);
    CHECK(sm.components.size() >= 1);
    CHECK(sm.components.size() <= k + 1);
    CHECK(sm.components.size() == seifert_circle_count(d));

    // writhe is invariant under re-indexing; reversal keeps every sign
    std::vector<std::pair<Vec2, int>> signs;
    for (const auto& c : d.crossings) signs.push_back({c.geometry.point, c.sign});
    const auto rot = diagram_with_signs(d.lens, d.curve.rotated(d.curve.size() / 2), signs);
    CHECK(writhe(rot) == writhe(d));
    const auto rev = self_intersections(d.curve.reversed());
    CHECK(rev.size() == d.crossings.size());
    std::int64_t rev_writhe = 0;
    for (const auto& p : rev)
      for (const auto& c : d.crossings)
        if (c.geometry.point == p.point) {
          // over strand is the same strand; both tangents flip
          rev_writhe += c.sign;
        }
    CHECK(rev_writhe == writhe(d));
  }
}

TEST_CASE("random diagram refuses impossible requests") {
  CHECK(code_of([] { random_diagram(make_lens(3, 1), {0, 4}, 2, 1); }) == ErrorCode::GenerationFailure);
}
