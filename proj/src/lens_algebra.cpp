#include "seifert/lens_algebra.hpp"

#include "seifert/error.hpp"

#include <numeric>
#include <string>

namespace seifert {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "integer overflow in addition", Stage::Algebra);
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorCode::Overflow, "integer overflow in multiplication", Stage::Algebra);
  return out;
}

std::int64_t checked_neg(std::int64_t a) { return checked_mul(a, -1); }

TorusClass operator+(TorusClass a, TorusClass b) { return {checked_add(a.x, b.x), checked_add(a.y, b.y)}; }
TorusClass operator-(TorusClass a) { return {checked_neg(a.x), checked_neg(a.y)}; }
TorusClass operator*(std::int64_t k, TorusClass a) { return {checked_mul(k, a.x), checked_mul(k, a.y)}; }

std::int64_t pairing(TorusClass a, TorusClass b) {
  return checked_add(checked_mul(a.x, b.y), checked_neg(checked_mul(a.y, b.x)));
}

namespace {

std::int64_t abs_checked(std::int64_t v) { return v < 0 ? checked_neg(v) : v; }

// Exact a/b; throws if b does not divide a.
std::int64_t exact_div(std::int64_t a, std::int64_t b, const char* what) {
  if (b == 0 || a % b != 0)
    throw Error(ErrorCode::InternalIntegrality, std::string("non-integral quotient in ") + what, Stage::Algebra);
  return a / b;
}

}  // namespace

LensSpace make_lens(std::int64_t p, std::int64_t q) {
  if (p < 1) throw Error(ErrorCode::InvalidParameters, "p must be >= 1, got " + std::to_string(p), Stage::Algebra);
  if (q < 0 || q >= p)
    throw Error(ErrorCode::InvalidParameters, "q must satisfy 0 <= q < p, got q=" + std::to_string(q), Stage::Algebra);
  if (std::gcd(p, q) != 1)
    throw Error(ErrorCode::InvalidParameters,
                "gcd(p,q) must be 1, got (" + std::to_string(p) + "," + std::to_string(q) + ")", Stage::Algebra);

  // q*pp = -1 (mod p): pp = -q^{-1} mod p via extended Euclid on (q, p).
  std::int64_t pp = 0;
  if (p > 1) {
    std::int64_t old_r = q, r = p, old_s = 1, s = 0;
    while (r != 0) {
      const std::int64_t quot = old_r / r;
      std::tie(old_r, r) = std::make_pair(r, old_r - quot * r);
      std::tie(old_s, s) = std::make_pair(s, old_s - quot * s);
    }
    // old_s * q = 1 (mod p)
    const std::int64_t inv = ((old_s % p) + p) % p;
    pp = (p - inv) % p;
  }
  const std::int64_t qp = exact_div(checked_add(1, checked_mul(q, pp)), p, "gluing coefficient q'");
  LensSpace lens{p, q, qp, pp};
  if (checked_mul(lens.p, lens.qp) - checked_mul(lens.q, lens.pp) != 1)
    throw Error(ErrorCode::InternalIntegrality, "gluing determinant check failed", Stage::Algebra);
  return lens;
}

std::tuple<std::int64_t, std::int64_t, std::int64_t> primitive_decompose(TorusClass cls) {
  if (cls.is_zero()) return {0, 0, 0};
  const std::int64_t n = std::gcd(abs_checked(cls.x), abs_checked(cls.y));
  return {n, cls.x / n, cls.y / n};
}

std::int64_t order_r(const LensSpace& lens, TorusClass cls) {
  const std::int64_t g = cls.y == 0 ? lens.p : std::gcd(lens.p, abs_checked(cls.y));
  return lens.p / g;
}

std::pair<std::int64_t, std::int64_t> decompose_r_multiple(const LensSpace& lens, const ClassDecomposition& dec) {
  const std::int64_t rn = checked_mul(dec.r, dec.n);
  const std::int64_t c_mu2 = exact_div(checked_mul(rn, dec.b), lens.p, "r*n*b/p");
  const std::int64_t c_mu1 = checked_add(checked_mul(rn, dec.a), checked_mul(c_mu2, lens.q));
  return {c_mu1, c_mu2};
}

ClassDecomposition decompose(const LensSpace& lens, TorusClass cls) {
  ClassDecomposition dec;
  std::tie(dec.n, dec.a, dec.b) = primitive_decompose(cls);
  dec.r = order_r(lens, cls);
  std::tie(dec.c_mu1, dec.c_mu2) = decompose_r_multiple(lens, dec);
  return dec;
}

TorusClass mu2_class(const LensSpace& lens) { return {-lens.q, lens.p}; }

BoundarySlope corollary_slope(const LensSpace& lens, const ClassDecomposition& dec, std::int64_t writhe) {
  // r n^2 (a + bq/p) b = r n^2 (a p + b q) b / p
  const std::int64_t ap_bq = checked_add(checked_mul(dec.a, lens.p), checked_mul(dec.b, lens.q));
  const std::int64_t numer = checked_mul(checked_mul(checked_mul(dec.r, checked_mul(dec.n, dec.n)), ap_bq), dec.b);
  const std::int64_t cobordism = exact_div(numer, lens.p, "corollary cobordism term");
  const std::int64_t twist = checked_mul(dec.r, writhe);
  return {dec.r, checked_neg(checked_add(cobordism, twist))};
}

}  // namespace seifert
