#pragma once

// Exact rational scalars and 2-vectors backed by GMP.

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace seifert {

using Rational = mpq_class;

struct Vec2 {
  Rational x;
  Rational y;

  Vec2() = default;
  Vec2(Rational x_, Rational y_) : x(std::move(x_)), y(std::move(y_)) {}

  friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
  friend Vec2 operator*(const Rational& s, const Vec2& a) { return {s * a.x, s * a.y}; }
  Vec2& operator+=(const Vec2& b) {
    x += b.x;
    y += b.y;
    return *this;
  }
  friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Vec2& a, const Vec2& b) { return !(a == b); }
  bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Largest integer <= q.
inline mpz_class floor_z(const Rational& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

/// q - floor(q), in [0,1).
inline Rational frac(const Rational& q) { return q - Rational(floor_z(q)); }

/// Converts to int64, throwing on overflow.
std::int64_t to_int64(const mpz_class& z);

/// Parses "n", "n/d", "-n/d"; throws seifert::Error(Parse) on malformed text or d == 0.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" text (den printed even when 1).
std::string to_string(const Rational& q);

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace seifert
