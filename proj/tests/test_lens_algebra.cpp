#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "seifert/error.hpp"
#include "seifert/lens_algebra.hpp"

#include <limits>
#include <numeric>
#include <random>

using namespace seifert;

namespace {

// Brute force: smallest pp in [0,p) with (1 + q pp) divisible by p.
std::pair<std::int64_t, std::int64_t> brute_gluing(std::int64_t p, std::int64_t q) {
  for (std::int64_t pp = 0; pp < p; ++pp)
    if ((1 + q * pp) % p == 0) return {(1 + q * pp) / p, pp};
  return {0, -1};
}

std::int64_t brute_order(std::int64_t p, std::int64_t y) {
  for (std::int64_t r = 1;; ++r)
    if ((r * y) % p == 0) return r;
}

}  // namespace

TEST_CASE("make_lens examples") {
  const auto l31 = make_lens(3, 1);
  CHECK(l31.qp == 1);
  CHECK(l31.pp == 2);
  const auto s3 = make_lens(1, 0);
  CHECK(s3.qp == 1);
  CHECK(s3.pp == 0);
  const auto l52 = make_lens(5, 2);
  CHECK(l52.qp == 1);
  CHECK(l52.pp == 2);
}

TEST_CASE("make_lens rejects invalid parameters") {
  for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{0, 0}, {3, 3}, {4, 2}, {5, -1}}) {
    try {
      make_lens(p, q);
      FAIL("expected invalid-parameters");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidParameters);
    }
  }
}

TEST_CASE("gluing determinant and canonical p' against brute force") {
  for (std::int64_t p = 1; p <= 40; ++p)
    for (std::int64_t q = 0; q < p; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto lens = make_lens(p, q);
      CHECK(lens.p * lens.qp - lens.q * lens.pp == 1);
      CHECK(lens.pp >= 0);
      CHECK(lens.pp < p);
      const auto [qp, pp] = brute_gluing(p, q);
      CHECK(lens.qp == qp);
      CHECK(lens.pp == pp);
    }
}

TEST_CASE("primitive_decompose") {
  CHECK(primitive_decompose({0, 2}) == std::tuple<std::int64_t, std::int64_t, std::int64_t>{2, 0, 1});
  CHECK(primitive_decompose({0, 0}) == std::tuple<std::int64_t, std::int64_t, std::int64_t>{0, 0, 0});
  CHECK(primitive_decompose({4, 6}) == std::tuple<std::int64_t, std::int64_t, std::int64_t>{2, 2, 3});
  CHECK(primitive_decompose({-3, 0}) == std::tuple<std::int64_t, std::int64_t, std::int64_t>{3, -1, 0});
}

TEST_CASE("order_r examples and minimality") {
  CHECK(order_r(make_lens(3, 1), {0, 2}) == 3);
  CHECK(order_r(make_lens(7, 3), {5, 0}) == 1);
  CHECK(order_r(make_lens(4, 1), {1, 2}) == 2);
  for (std::int64_t p = 1; p <= 12; ++p)
    for (std::int64_t y = -15; y <= 15; ++y) CHECK(order_r(make_lens(p, p == 1 ? 0 : 1), {1, y}) == brute_order(p, y));
}

TEST_CASE("decompose_r_multiple") {
  const auto l31 = make_lens(3, 1);
  const auto d = decompose(l31, {0, 2});
  CHECK(d.n == 2);
  CHECK(d.a == 0);
  CHECK(d.b == 1);
  CHECK(d.r == 3);
  CHECK(d.c_mu1 == 2);
  CHECK(d.c_mu2 == 2);

  const auto flat = decompose(make_lens(5, 2), {3, 0});
  CHECK(flat.r == 1);
  CHECK(flat.c_mu1 == 3);
  CHECK(flat.c_mu2 == 0);

  const auto l52 = decompose(make_lens(5, 2), {1, 1});
  CHECK(l52.r == 5);
  CHECK(l52.c_mu1 == 7);
  CHECK(l52.c_mu2 == 1);
}

TEST_CASE("mu2_class") {
  CHECK(mu2_class(make_lens(3, 1)) == TorusClass{-1, 3});
  CHECK(mu2_class(make_lens(1, 0)) == TorusClass{0, 1});
  CHECK(mu2_class(make_lens(5, 2)) == TorusClass{-2, 5});
}

TEST_CASE("corollary_slope examples") {
  const auto s3 = make_lens(1, 0);
  CHECK(corollary_slope(s3, decompose(s3, {2, 3}), 0) == BoundarySlope{1, -6});
  const auto l73 = make_lens(7, 3);
  CHECK(corollary_slope(l73, decompose(l73, {4, 0}), 0) == BoundarySlope{1, 0});
  const auto l31 = make_lens(3, 1);
  for (std::int64_t w = -4; w <= 4; ++w)
    CHECK(corollary_slope(l31, decompose(l31, {0, 2}), w) == BoundarySlope{3, -(4 + 3 * w)});
}

TEST_CASE("property: reconstruction, scaling and corollary identity") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::int64_t> coord(-30, 30);
  for (int trial = 0; trial < 2000; ++trial) {
    std::int64_t p = 1 + static_cast<std::int64_t>(rng() % 25);
    std::int64_t q = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(p));
    while (std::gcd(p, q) != 1) q = (q + 1) % p;
    const auto lens = make_lens(p, q);
    const TorusClass cls{coord(rng), coord(rng)};
    const auto d = decompose(lens, cls);
    // reconstruction: r (x,y) = c_mu1 (1,0) + c_mu2 (-q,p)
    CHECK(d.r * cls.x == d.c_mu1 - d.c_mu2 * q);
    CHECK(d.r * cls.y == d.c_mu2 * p);
    // minimality
    for (std::int64_t s = 1; s < d.r; ++s) CHECK((s * cls.y) % p != 0);
    // scaling
    const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 4);
    const auto [n2, a2, b2] = primitive_decompose(k * cls);
    CHECK(n2 == k * d.n);
    CHECK(a2 == d.a);
    CHECK(b2 == d.b);
    // corollary mu term equals -(n b c_mu1 + r w)
    const std::int64_t w = coord(rng) / 5;
    CHECK(corollary_slope(lens, d, w).mu_coeff == -(d.n * d.b * d.c_mu1 + d.r * w));
  }
}

TEST_CASE("overflow is detected") {
  const auto big = std::numeric_limits<std::int64_t>::max() / 2;
  CHECK_THROWS_AS(checked_mul(big, 3), Error);
  CHECK_THROWS_AS(checked_add(std::numeric_limits<std::int64_t>::max(), 1), Error);
  const auto l31 = make_lens(3, 1);
  CHECK_THROWS_AS(corollary_slope(l31, decompose(l31, {0, big}), 0), Error);
}
