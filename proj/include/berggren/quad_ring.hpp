#pragma once

// Exact arithmetic in Z[sqrt 2]. Powers of the unit 3 + 2 sqrt 2 carry the
// closed forms of the B-matrix chain.

#include "berggren/bigint.hpp"

#include <cstdint>
#include <ostream>
#include <utility>

namespace berggren {

/// a + b sqrt(2)
struct quad_int {
  bigint a;
  bigint b;

  friend bool operator==(const quad_int&, const quad_int&) = default;

  friend quad_int operator+(const quad_int& p, const quad_int& q) { return {p.a + q.a, p.b + q.b}; }
  friend quad_int operator-(const quad_int& p, const quad_int& q) { return {p.a - q.a, p.b - q.b}; }
  friend quad_int operator*(const quad_int& p, const quad_int& q) {
    return {p.a * q.a + 2 * p.b * q.b, p.a * q.b + p.b * q.a};
  }

  friend std::ostream& operator<<(std::ostream& os, const quad_int& q) {
    return os << q.a << (q.b < 0 ? " - " : " + ") << abs(q.b) << "*sqrt2";
  }
};

inline quad_int quad_add(const quad_int& p, const quad_int& q) { return p + q; }
inline quad_int quad_mul(const quad_int& p, const quad_int& q) { return p * q; }
inline quad_int quad_conj(const quad_int& p) { return {p.a, -p.b}; }

/// a^2 - 2 b^2
inline bigint norm(const quad_int& p) { return p.a * p.a - 2 * p.b * p.b; }

/// A value stored as twice_value / 2.
struct half_int {
  bigint twice_value;

  bool is_integer() const { return is_even(twice_value); }
  rational value() const { return rational(twice_value, 2); }

  friend bool operator==(const half_int&, const half_int&) = default;
};

inline quad_int quad_pow(quad_int base, std::uint64_t exponent) {
  quad_int result{1, 0};
  while (exponent != 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent != 0) base = base * base;
  }
  return result;
}

/// (3 + 2 sqrt 2)^n = p_n + q_n sqrt 2, by binary exponentiation.
inline quad_int silver_power(std::uint64_t n) { return quad_pow({3, 2}, n); }

/// The coefficients of B^n. With (3 + 2 sqrt 2)^n = p + q sqrt 2 the conjugate
/// sum is 2p and the conjugate difference is 2q sqrt 2, so b1 = p / 2 and b2 = q.
inline std::pair<half_int, bigint> b1_b2(std::uint64_t n) {
  quad_int s = silver_power(n);
  return {half_int{std::move(s.a)}, std::move(s.b)};
}

}  // namespace berggren
