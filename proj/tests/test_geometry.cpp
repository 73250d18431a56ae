#include "berggren/geometry.hpp"
#include "berggren/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace berggren;

namespace {

bool rel_close(double a, double b, double tol) { return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b)); }

}  // namespace

TEST(DescendantPoints, Root) {
  const auto pts = descendant_points(ppt::root());
  EXPECT_EQ(pts[0], (point3{5, 12, 13}));
  EXPECT_EQ(pts[1], (point3{21, 20, 29}));
  EXPECT_EQ(pts[2], (point3{15, 8, 17}));
}

TEST(DescendantPoints, EdgeVectors) {
  for (const auto& t : oracle::scan_ppt_by_hypotenuse(3000)) {
    const auto e = edges_of(descendant_points(t));
    const bigint& x = t.x();
    const bigint& y = t.y();
    ASSERT_EQ(e.u, (vec3{4 * y, 2 * y, 4 * y}));
    ASSERT_EQ(e.w, (vec3{-2 * x, -4 * x, -4 * x}));
    ASSERT_EQ(e.v, (vec3{-2 * x + 4 * y, -4 * x + 2 * y, -4 * x + 4 * y}));
    ASSERT_EQ(cross(e.u, e.v), (vec3{8 * x * y, 8 * x * y, -12 * x * y}));
  }
}

TEST(Noncollinear, Examples) {
  EXPECT_TRUE(check_noncollinear(ppt::root()));
  EXPECT_TRUE(check_noncollinear(ppt::make(119, 120, 169)));
}

TEST(Plane, Examples) {
  EXPECT_EQ(descendant_plane(ppt::root()), (plane{2, 2, -3, 5}));
  EXPECT_TRUE(descendant_plane(ppt::root()).contains(point3{5, 12, 13}));
  EXPECT_EQ(descendant_plane(ppt::make(5, 12, 13)), (plane{2, 2, -3, 13}));
  for (const auto& t : oracle::scan_ppt_by_hypotenuse(10000))
    for (const auto& p : descendant_points(t)) ASSERT_TRUE(descendant_plane(t).contains(p));
}

TEST(Area, Examples) {
  EXPECT_EQ(descendant_area(ppt::root()), surd(24, 17));
  EXPECT_EQ(descendant_area(ppt::make(5, 12, 13)), surd(120, 17));
  const auto e = edges_of(descendant_points(ppt::root()));
  EXPECT_EQ(cross(e.u, e.v), (vec3{96, 96, -144}));
  EXPECT_EQ(rational(norm2(cross(e.u, e.v)), 4), descendant_area(ppt::root()).squared());
}

TEST(Surd, NormalizationAndEquality) {
  EXPECT_EQ(surd(2, 33).normalized().radicand(), 33);
  EXPECT_EQ(surd(1, 72).normalized().coeff(), 6);
  EXPECT_EQ(surd(1, 72).normalized().radicand(), 2);
  EXPECT_EQ(surd(1, 72), surd(6, 2));
  EXPECT_EQ(surd(3, 1), surd(1, 9));
  EXPECT_FALSE(surd(-3, 1) == surd(3, 1));
  EXPECT_EQ(surd(0, 5), surd(0, 1));
  EXPECT_THROW(surd(1, -2), error);
}

TEST(NonRight, RootDotProducts) {
  const auto [uv, uw, vw] = check_non_right(ppt::root());
  EXPECT_EQ(uv, 192);
  EXPECT_EQ(uw, -384);
  EXPECT_EQ(vw, -60);
}

TEST(NonRight, ClosedFormsAndNonzero) {
  for (const auto& t : oracle::scan_ppt_by_hypotenuse(10000)) {
    const auto [uv, uw, vw] = check_non_right(t);
    const bigint& x = t.x();
    const bigint& y = t.y();
    ASSERT_EQ(uv, -32 * x * y + 36 * y * y);
    ASSERT_EQ(uw, -32 * x * y);
    ASSERT_EQ(vw, 36 * x * x - 32 * x * y);
    ASSERT_NE(uv, 0);
    ASSERT_NE(uw, 0);
    ASSERT_NE(vw, 0);
  }
}

TEST(Metrics, Root) {
  const auto m = descendant_triangle_metrics(ppt::root());
  EXPECT_EQ(m.D, 33);
  EXPECT_EQ(m.circumradius_sq, rational(2673, 17));
  EXPECT_EQ(m.inradius_exact.p, 21);
  EXPECT_EQ(m.inradius_exact.D, 33);
  EXPECT_EQ(m.side_u, 24);
  EXPECT_EQ(m.side_w, 18);
  EXPECT_EQ(m.side_v, surd(2, 33));
  EXPECT_EQ(m.area, surd(24, 17));
  // 40-digit reference values for (21 - sqrt 33) / sqrt 17 and 9 sqrt 33 / sqrt 17.
  EXPECT_TRUE(rel_close(m.inradius_float, 3.699987033724520534, 1e-15));
  EXPECT_TRUE(rel_close(m.circumradius_float, 12.53934982834624719, 1e-15));
  EXPECT_TRUE(rel_close(inradius_quotient_form(ppt::root()), m.inradius_float, 1e-12));
}

TEST(Metrics, RationalizationIdentity) {
  for (const auto& t : oracle::scan_ppt_by_hypotenuse(10000)) {
    const bigint& x = t.x();
    const bigint& y = t.y();
    const bigint d = descendant_discriminant(t);
    ASSERT_EQ(9 * (x + y) * (x + y) - d, 34 * x * y);
    ASSERT_EQ(d, 9 * (x - y) * (x - y) + 2 * x * y);
    ASSERT_GT(d, 0);
  }
}

TEST(Metrics, AgreeWithGenericTriangleFormulas) {
  for (const auto& t : oracle::scan_ppt_by_hypotenuse(10000)) {
    const auto m = descendant_triangle_metrics(t);
    const auto g = triangle_radii_from_vectors(m.points[0], m.points[1], m.points[2]);
    ASSERT_TRUE(rel_close(m.inradius_float, g.inradius, 1e-12)) << t;
    ASSERT_TRUE(rel_close(m.circumradius_float, g.circumradius, 1e-12)) << t;
    ASSERT_TRUE(rel_close(m.area.to_double(), g.area, 1e-12)) << t;
    ASSERT_EQ(17 * m.circumradius_sq, rational(81 * m.D));
  }
}

TEST(Metrics, DeepTriple) {
  tree_path p;
  for (int i = 0; i < 60; ++i) p.push_back(static_cast<letter>(i % 3));
  const ppt t = descend_path(p);
  const auto m = descendant_triangle_metrics(t);
  EXPECT_GT(m.inradius_float, 0);
  EXPECT_TRUE(rel_close(m.inradius_float, inradius_quotient_form(t), 1e-14));
}

TEST(GenericRadii, Examples) {
  EXPECT_THROW(triangle_radii_from_vectors({0, 0, 0}, {1, 0, 0}, {2, 0, 0}), error);
  const auto g = triangle_radii_from_vectors({0, 0, 0}, {3, 0, 0}, {0, 4, 0});
  EXPECT_DOUBLE_EQ(g.inradius, 1.0);
  EXPECT_DOUBLE_EQ(g.circumradius, 2.5);
  EXPECT_DOUBLE_EQ(g.area, 6.0);
}
