#pragma once

// Integer arithmetic of L(p,q) = V1 u_phi V2 with phi(mu2) = -q mu1 + p lambda1.
// Homology classes on the Heegaard torus are written in the (mu1, lambda1) basis.

#include <cstdint>
#include <tuple>

namespace seifert {

/// Gluing data. Invariants: gcd(p,q) = 1, 0 <= q < p, p*qp - q*pp = 1, 0 <= pp < p.
struct LensSpace {
  std::int64_t p = 1;
  std::int64_t q = 0;
  std::int64_t qp = 1;  // q' of the gluing matrix
  std::int64_t pp = 0;  // p' of the gluing matrix

  friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

struct TorusClass {
  std::int64_t x = 0;  // mu1 coefficient
  std::int64_t y = 0;  // lambda1 coefficient

  friend bool operator==(const TorusClass&, const TorusClass&) = default;
  bool is_zero() const { return x == 0 && y == 0; }
};

TorusClass operator+(TorusClass a, TorusClass b);
TorusClass operator-(TorusClass a);
TorusClass operator*(std::int64_t k, TorusClass a);

/// Algebraic intersection number a.b with mu1.lambda1 = +1.
std::int64_t pairing(TorusClass a, TorusClass b);

struct ClassDecomposition {
  std::int64_t n = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t r = 1;
  std::int64_t c_mu1 = 0;  // r*n*a + r*n*b*q/p
  std::int64_t c_mu2 = 0;  // r*n*b/p

  friend bool operator==(const ClassDecomposition&, const ClassDecomposition&) = default;
};

struct BoundarySlope {
  std::int64_t lambda_coeff = 0;
  std::int64_t mu_coeff = 0;

  friend bool operator==(const BoundarySlope&, const BoundarySlope&) = default;
};

// Checked int64 helpers; throw Error(Overflow) instead of wrapping.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_neg(std::int64_t a);

LensSpace make_lens(std::int64_t p, std::int64_t q);

/// [c] = n (a mu1 + b lambda1), n >= 0, gcd(a,b) = 1 unless n = 0.
std::tuple<std::int64_t, std::int64_t, std::int64_t> primitive_decompose(TorusClass cls);

/// Order of cls in H1(L(p,q)) = Z/p generated by lambda1.
std::int64_t order_r(const LensSpace& lens, TorusClass cls);

/// Coefficients of r[L] = c_mu1 mu1 + c_mu2 mu2, both exact.
std::pair<std::int64_t, std::int64_t> decompose_r_multiple(const LensSpace& lens, const ClassDecomposition& dec);

/// Full step-2 decomposition of a class (n, a, b, r, c_mu1, c_mu2).
ClassDecomposition decompose(const LensSpace& lens, TorusClass cls);

/// Class of phi(mu2) on the boundary of V1.
TorusClass mu2_class(const LensSpace& lens);

/// r lambda_NK - (r n^2 (a + bq/p) b + r writhe) mu_NK, computed without rounding.
BoundarySlope corollary_slope(const LensSpace& lens, const ClassDecomposition& dec, std::int64_t writhe);

}  // namespace seifert
