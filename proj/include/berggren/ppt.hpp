#pragma once

/// Primitive Pythagorean triples, their two parametrizations, and the
/// incircle / circumcircle radii of the corresponding right triangle.
///
/// Canonical order is (odd leg, even leg, hypotenuse). Every value is an
/// arbitrary-precision integer; half-integer radii are exact rationals.

#include "berggren/bigint.hpp"
#include "berggren/error.hpp"

#include <compare>
#include <optional>
#include <ostream>

namespace berggren {

/// Any integer triple, not necessarily Pythagorean or primitive.
struct raw_triple {
  bigint x;
  bigint y;
  bigint z;

  friend bool operator==(const raw_triple&, const raw_triple&) = default;
};

/// Returns the first violated invariant of a canonical primitive triple, if any.
/// Order of checks: positivity, Pythagorean relation, primitivity, leg parity.
inline std::optional<error_code> check_canonical(const bigint& x, const bigint& y, const bigint& z) {
  if (x <= 0 || y <= 0 || z <= 0) return error_code::non_positive;
  if (x * x + y * y != z * z) return error_code::not_pythagorean;
  if (gcd(x, y) != 1) return error_code::not_primitive;
  // Unreachable for primitive Pythagorean input (two odd legs give a sum
  // of squares congruent to 2 mod 4); kept so the odd/even order is checked.
  if (!is_odd(x) || !is_even(y)) return error_code::both_legs_same_parity;
  return std::nullopt;
}

class ppt {
 public:
  /// Throws berggren::error unless (x, y, z) is already a canonical PPT.
  static ppt make(bigint x, bigint y, bigint z) {
    if (auto violation = check_canonical(x, y, z))
      throw error(*violation, "(" + x.str() + ", " + y.str() + ", " + z.str() + ")");
    return ppt(std::move(x), std::move(y), std::move(z));
  }

  static ppt root() { return ppt(3, 4, 5); }

  const bigint& x() const noexcept { return x_; }
  const bigint& y() const noexcept { return y_; }
  const bigint& z() const noexcept { return z_; }

  raw_triple raw() const { return {x_, y_, z_}; }

  friend bool operator==(const ppt&, const ppt&) = default;

  /// Orders by hypotenuse, then odd leg.
  friend std::strong_ordering operator<=>(const ppt& a, const ppt& b) {
    if (a.z_ != b.z_) return a.z_ < b.z_ ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.x_ != b.x_) return a.x_ < b.x_ ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const ppt& t) {
    return os << '(' << t.x_ << ',' << t.y_ << ',' << t.z_ << ')';
  }

 private:
  ppt(bigint x, bigint y, bigint z) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {}

  bigint x_;
  bigint y_;
  bigint z_;
};

struct validated_triple {
  ppt triple;
  bool swapped = false;  // legs were given as (even, odd) and reordered
};

/// Accepts any integers; legs given in (even, odd) order are normalized and
/// the swap is reported.
inline validated_triple validate_triple(const bigint& x, const bigint& y, const bigint& z) {
  if (x > 0 && y > 0 && is_even(x) && is_odd(y) && !check_canonical(y, x, z))
    return {ppt::make(y, x, z), true};
  return {ppt::make(x, y, z), false};
}

inline validated_triple validate_triple(const raw_triple& t) { return validate_triple(t.x, t.y, t.z); }

/// (m, n) with m > n >= 1, gcd(m, n) = 1 and m - n odd.
class euclid_pair {
 public:
  static std::optional<euclid_pair> try_make(const bigint& m, const bigint& n) {
    if (n < 1 || m <= n || gcd(m, n) != 1 || is_even(m - n)) return std::nullopt;
    return euclid_pair(m, n);
  }

  static euclid_pair make(const bigint& m, const bigint& n) {
    if (auto p = try_make(m, n)) return *p;
    throw error(error_code::invalid_euclid_pair, "(m=" + m.str() + ", n=" + n.str() + ")");
  }

  const bigint& m() const noexcept { return m_; }
  const bigint& n() const noexcept { return n_; }

  friend bool operator==(const euclid_pair&, const euclid_pair&) = default;

 private:
  euclid_pair(bigint m, bigint n) : m_(std::move(m)), n_(std::move(n)) {}

  bigint m_;
  bigint n_;
};

inline ppt from_euclid(const euclid_pair& p) {
  const bigint m2 = p.m() * p.m();
  const bigint n2 = p.n() * p.n();
  return ppt::make(m2 - n2, 2 * p.m() * p.n(), m2 + n2);
}

/// Inverse of from_euclid: m = sqrt((z + x) / 2), n = sqrt((z - x) / 2).
inline euclid_pair to_euclid(const ppt& t) {
  bigint m;
  bigint n;
  if (!is_perfect_square((t.z() + t.x()) / 2, &m) || !is_perfect_square((t.z() - t.x()) / 2, &n))
    throw error(error_code::invariant_violation, "no Euclid pair for a validated triple");
  return euclid_pair::make(m, n);
}

/// F(m, n): x = ((3 - (-1)^m) / 2) m n + m, y = (x^2 - m^2) / 2m, z = (x^2 + m^2) / 2m.
/// The result is a Pythagorean triple that need not be primitive.
inline raw_triple f_param(const bigint& m, const bigint& n) {
  if (m < 1 || n < 1) throw error(error_code::non_positive, "F(m, n) needs m, n >= 1");
  const bigint coeff = is_even(m) ? 1 : 2;
  const bigint x = coeff * m * n + m;
  const bigint two_m = 2 * m;
  const bigint x2 = x * x;
  const bigint m2 = m * m;
  if ((x2 - m2) % two_m != 0 || (x2 + m2) % two_m != 0)
    throw error(error_code::non_integral_result,
                "F(" + m.str() + ", " + n.str() + ") is not integral");
  return {x, (x2 - m2) / two_m, (x2 + m2) / two_m};
}

/// (x + y - z) / 2, a positive integer for every PPT.
inline bigint inradius(const ppt& t) { return (t.x() + t.y() - t.z()) / 2; }

/// z / 2, exact.
inline rational circumradius(const ppt& t) { return rational(t.z(), 2); }

}  // namespace berggren
