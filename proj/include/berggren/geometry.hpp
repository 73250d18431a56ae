#pragma once

/// The three Berggren children of a triple read as points in 3-space, and the
/// exact geometry of the triangle they span.
///
/// With u = BP - AP, v = CP - AP, w = CP - BP for P = (x, y, z):
///   u = (4y, 2y, 4y), v = (-2x + 4y, -4x + 2y, -4x + 4y), w = (-2x, -4x, -4x),
///   u x v = (8xy, 8xy, -12xy), |u| = 6y, |w| = 6x, |v| = 2 sqrt(D),
///   D = 9x^2 - 16xy + 9y^2.
/// The inradius is kept in the rationalized form r = (3(x + y) - sqrt D) / sqrt 17,
/// which follows from (3x + 3y)^2 - D = 34xy, and the circumradius as R^2 = 81 D / 17.

#include "berggren/bigint.hpp"
#include "berggren/error.hpp"
#include "berggren/inradius.hpp"
#include "berggren/path.hpp"
#include "berggren/ppt.hpp"
#include "berggren/tree.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <array>
#include <cmath>
#include <ostream>
#include <tuple>

namespace berggren {

struct vec3 {
  bigint a;
  bigint b;
  bigint c;

  friend bool operator==(const vec3&, const vec3&) = default;
  friend vec3 operator-(const vec3& p, const vec3& q) { return {p.a - q.a, p.b - q.b, p.c - q.c}; }
  friend std::ostream& operator<<(std::ostream& os, const vec3& p) {
    return os << '(' << p.a << ',' << p.b << ',' << p.c << ')';
  }
};

using point3 = vec3;

inline bigint dot(const vec3& p, const vec3& q) { return p.a * q.a + p.b * q.b + p.c * q.c; }
inline vec3 cross(const vec3& p, const vec3& q) {
  return {p.b * q.c - p.c * q.b, p.c * q.a - p.a * q.c, p.a * q.b - p.b * q.a};
}
inline bigint norm2(const vec3& p) { return dot(p, p); }
inline bool is_zero(const vec3& p) { return p.a == 0 && p.b == 0 && p.c == 0; }

/// alpha a + beta b + gamma c + delta = 0
struct plane {
  bigint alpha;
  bigint beta;
  bigint gamma;
  bigint delta;

  bool contains(const point3& p) const { return alpha * p.a + beta * p.b + gamma * p.c + delta == 0; }

  friend bool operator==(const plane&, const plane&) = default;
};

/// coeff * sqrt(radicand). Stored as given; normalized() extracts square
/// factors, which needs a full factorization of the radicand. Equality
/// compares values exactly without normalizing.
class surd {
 public:
  surd(rational coeff, bigint radicand) : coeff_(std::move(coeff)), radicand_(std::move(radicand)) {
    if (radicand_ < 0) throw error(error_code::invariant_violation, "negative radicand");
  }

  const rational& coeff() const noexcept { return coeff_; }
  const bigint& radicand() const noexcept { return radicand_; }

  rational squared() const { return coeff_ * coeff_ * radicand_; }
  int sign() const { return squared() == 0 ? 0 : (coeff_ < 0 ? -1 : 1); }

  double to_double() const {
    using wide = boost::multiprecision::cpp_bin_float_50;
    return (wide(coeff_) * boost::multiprecision::sqrt(wide(radicand_))).convert_to<double>();
  }

  /// Square-free radicand (1 for rational values, with 0 as 0 * sqrt 1).
  surd normalized() const {
    if (sign() == 0) return surd(0, 1);
    rational coeff = coeff_;
    bigint inside = 1;
    for (const auto& pp : factorize(radicand_).prime_powers) {
      coeff *= pow(pp.prime, pp.exponent / 2);
      if (pp.exponent % 2) inside *= pp.prime;
    }
    return surd(std::move(coeff), std::move(inside));
  }

  friend bool operator==(const surd& a, const surd& b) {
    return a.sign() == b.sign() && a.squared() == b.squared();
  }

 private:
  rational coeff_;
  bigint radicand_;
};

/// (A P, B P, C P) in letter order.
inline std::array<point3, 3> descendant_points(const ppt& t, const tree& tr = standard_tree()) {
  std::array<point3, 3> pts;
  for (letter l : all_letters) {
    raw_triple q = tr.generators()[l].apply(t);
    pts[static_cast<std::size_t>(l)] = {std::move(q.x), std::move(q.y), std::move(q.z)};
  }
  return pts;
}

struct triangle_edges {
  vec3 u;  // B P - A P
  vec3 v;  // C P - A P
  vec3 w;  // C P - B P
};

inline triangle_edges edges_of(const std::array<point3, 3>& pts) {
  return {pts[1] - pts[0], pts[2] - pts[0], pts[2] - pts[1]};
}

inline bool check_noncollinear(const ppt& t, const tree& tr = standard_tree()) {
  const auto e = edges_of(descendant_points(t, tr));
  return !is_zero(cross(e.u, e.v));
}

/// 2a + 2b - 3c + z = 0. gcd(2, 2, -3) = 1, so no normalization applies.
inline plane descendant_plane(const ppt& t) { return {2, 2, -3, t.z()}; }

/// 2xy sqrt 17
inline surd descendant_area(const ppt& t) { return surd(rational(2 * t.x() * t.y()), 17); }

/// (u.v, u.w, v.w), computed from the actual points.
inline std::tuple<bigint, bigint, bigint> check_non_right(const ppt& t, const tree& tr = standard_tree()) {
  const auto e = edges_of(descendant_points(t, tr));
  return {dot(e.u, e.v), dot(e.u, e.w), dot(e.v, e.w)};
}

/// r = (p - sqrt D) / sqrt 17 with p = 3(x + y).
struct exact_inradius {
  bigint p;
  bigint D;
};

struct desc_triangle_metrics {
  std::array<point3, 3> points;
  plane containing_plane;
  surd area;
  bigint side_u;  // |u| = 6y
  bigint side_w;  // |w| = 6x
  surd side_v;    // |v| = 2 sqrt D
  bigint D;
  std::array<bigint, 3> dot_products;  // u.v, u.w, v.w
  exact_inradius inradius_exact;
  rational circumradius_sq;  // 81 D / 17
  double inradius_float = 0;
  double circumradius_float = 0;
};

/// D = 9x^2 - 16xy + 9y^2 = (3x - 3y)^2 + 2xy > 0.
inline bigint descendant_discriminant(const ppt& t) {
  return 9 * t.x() * t.x() - 16 * t.x() * t.y() + 9 * t.y() * t.y();
}

namespace detail {
using wide_float = boost::multiprecision::cpp_bin_float_50;

inline wide_float wide(const bigint& v) { return wide_float(v); }
}  // namespace detail

/// Evaluates the rationalized inradius (p - sqrt D) / sqrt 17 through the
/// cancellation-free equivalent 34xy / ((p + sqrt D) sqrt 17).
inline double inradius_to_double(const ppt& t, const exact_inradius& r) {
  using detail::wide;
  const auto root_d = boost::multiprecision::sqrt(wide(r.D));
  const auto root_17 = boost::multiprecision::sqrt(detail::wide_float(17));
  return (wide(34 * t.x() * t.y()) / ((wide(r.p) + root_d) * root_17)).convert_to<double>();
}

/// The quotient form 2xy sqrt 17 / (3x + 3y + sqrt D).
inline double inradius_quotient_form(const ppt& t) {
  using detail::wide;
  const auto root_d = boost::multiprecision::sqrt(wide(descendant_discriminant(t)));
  const auto root_17 = boost::multiprecision::sqrt(detail::wide_float(17));
  return (wide(2 * t.x() * t.y()) * root_17 / (wide(3 * (t.x() + t.y())) + root_d)).convert_to<double>();
}

inline desc_triangle_metrics descendant_triangle_metrics(const ppt& t, const tree& tr = standard_tree()) {
  const bigint& x = t.x();
  const bigint& y = t.y();
  desc_triangle_metrics m{
      descendant_points(t, tr),
      descendant_plane(t),
      descendant_area(t),
      6 * y,
      6 * x,
      surd(2, 1),
      descendant_discriminant(t),
      {},
      {3 * (x + y), 0},
      0,
  };
  m.side_v = surd(2, m.D);
  m.inradius_exact.D = m.D;
  m.circumradius_sq = rational(81 * m.D, 17);

  const auto e = edges_of(m.points);
  m.dot_products = {dot(e.u, e.v), dot(e.u, e.w), dot(e.v, e.w)};

  auto require = [](bool ok, const char* what) {
    if (!ok) throw error(error_code::invariant_violation, what);
  };
  require(m.D > 0, "D must be positive");
  require(m.inradius_exact.p * m.inradius_exact.p - m.D == 34 * x * y, "(3x+3y)^2 - D != 34xy");
  require(norm2(e.u) == m.side_u * m.side_u, "|u| != 6y");
  require(norm2(e.w) == m.side_w * m.side_w, "|w| != 6x");
  require(norm2(e.v) == 4 * m.D, "|v|^2 != 4D");
  require(norm2(cross(e.u, e.v)) == 272 * x * x * y * y, "|u x v|^2 != 272 x^2 y^2");
  require(m.area.squared() == rational(68 * x * x * y * y), "area^2 != 68 x^2 y^2");
  for (const auto& p : m.points) require(m.containing_plane.contains(p), "descendant point off the plane");

  m.inradius_float = inradius_to_double(t, m.inradius_exact);
  m.circumradius_float =
      (9 * boost::multiprecision::sqrt(detail::wide(m.D)) / boost::multiprecision::sqrt(detail::wide_float(17)))
          .convert_to<double>();
  return m;
}

struct triangle_radii {
  double inradius;
  double circumradius;
  double area;
};

/// Incircle and circumcircle of an arbitrary integer triangle:
/// r = |u x v| / (|u| + |v| + |w|), R = |u| |v| |w| / (2 |u x v|).
/// Differences and squared norms are exact; only the square roots are floating.
inline triangle_radii triangle_radii_from_vectors(const point3& p1, const point3& p2, const point3& p3) {
  const vec3 u = p2 - p1;
  const vec3 v = p3 - p1;
  const vec3 w = p3 - p2;
  const vec3 n = cross(u, v);
  if (is_zero(n)) throw error(error_code::collinear_points, "points are collinear");
  const double cross_len = std::sqrt(to_double(norm2(n)));
  const double lu = std::sqrt(to_double(norm2(u)));
  const double lv = std::sqrt(to_double(norm2(v)));
  const double lw = std::sqrt(to_double(norm2(w)));
  return {cross_len / (lu + lv + lw), lu * lv * lw / (2 * cross_len), cross_len / 2};
}

}  // namespace berggren
