#include "berggren/ppt.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace berggren;

namespace {

error_code code_of(const bigint& x, const bigint& y, const bigint& z) {
  try {
    validate_triple(x, y, z);
  } catch (const error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected a validation error";
  return error_code::invariant_violation;
}

}  // namespace

TEST(ValidateTriple, AcceptsRoot) {
  auto v = validate_triple(3, 4, 5);
  EXPECT_EQ(v.triple, ppt::root());
  EXPECT_FALSE(v.swapped);
}

TEST(ValidateTriple, SwapsEvenOddLegs) {
  auto v = validate_triple(4, 3, 5);
  EXPECT_EQ(v.triple, ppt::root());
  EXPECT_TRUE(v.swapped);
}

TEST(ValidateTriple, ErrorPaths) {
  EXPECT_EQ(code_of(6, 8, 10), error_code::not_primitive);
  EXPECT_EQ(code_of(3, 4, 6), error_code::not_pythagorean);
  EXPECT_EQ(code_of(0, 4, 4), error_code::non_positive);
  EXPECT_EQ(code_of(-3, 4, 5), error_code::non_positive);
  EXPECT_EQ(code_of(3, 5, 7), error_code::not_pythagorean);
}

TEST(ValidateTriple, CanonicalCheckCatchesOddEvenOrderWithoutSwap) {
  EXPECT_EQ(check_canonical(4, 3, 5), error_code::both_legs_same_parity);
  EXPECT_THROW(ppt::make(4, 3, 5), error);
}

TEST(Euclid, ForwardExamples) {
  EXPECT_EQ(from_euclid(euclid_pair::make(2, 1)), ppt::make(3, 4, 5));
  EXPECT_EQ(from_euclid(euclid_pair::make(36, 1)), ppt::make(1295, 72, 1297));
  EXPECT_EQ(from_euclid(euclid_pair::make(12, 5)), ppt::make(119, 120, 169));
}

TEST(Euclid, InverseExamples) {
  EXPECT_EQ(to_euclid(ppt::root()), euclid_pair::make(2, 1));
  EXPECT_EQ(to_euclid(ppt::make(119, 120, 169)), euclid_pair::make(12, 5));
  EXPECT_EQ(to_euclid(ppt::make(5, 12, 13)), euclid_pair::make(3, 2));
}

TEST(Euclid, RejectsInvalidPairs) {
  EXPECT_FALSE(euclid_pair::try_make(3, 1));  // same parity
  EXPECT_FALSE(euclid_pair::try_make(9, 6));  // common factor
  EXPECT_FALSE(euclid_pair::try_make(8, 2));
  EXPECT_FALSE(euclid_pair::try_make(2, 2));
  EXPECT_FALSE(euclid_pair::try_make(1, 2));
  EXPECT_FALSE(euclid_pair::try_make(2, 0));
  EXPECT_THROW(euclid_pair::make(5, 3), error);
}

TEST(Euclid, RoundTripUpTo200) {
  for (int m = 2; m <= 200; ++m)
    for (int n = 1; n < m; ++n)
      if (auto p = euclid_pair::try_make(m, n)) {
        ASSERT_EQ(to_euclid(from_euclid(*p)), *p) << m << "," << n;
      }
}

TEST(FParam, Examples) {
  EXPECT_EQ(f_param(1, 1), (raw_triple{3, 4, 5}));
  EXPECT_EQ(f_param(1, 2), (raw_triple{5, 12, 13}));
}

TEST(FParam, FirstColumnMatchesEuclid) {
  for (int n = 1; n <= 100; ++n) {
    const bigint k = n;
    const raw_triple expected{2 * k + 1, 2 * k * k + 2 * k, 2 * k * k + 2 * k + 1};
    ASSERT_EQ(f_param(1, n), expected);
    ASSERT_EQ(from_euclid(euclid_pair::make(n + 1, n)).raw(), expected);
  }
}

TEST(FParam, ResultsArePythagoreanButNotAlwaysPrimitive) {
  bool saw_non_primitive = false;
  for (int m = 1; m <= 12; ++m)
    for (int n = 1; n <= 12; ++n) {
      raw_triple t;
      try {
        t = f_param(m, n);
      } catch (const error& e) {
        EXPECT_EQ(e.code(), error_code::non_integral_result);
        continue;
      }
      EXPECT_EQ(t.x * t.x + t.y * t.y, t.z * t.z);
      if (gcd(t.x, t.y) != 1) saw_non_primitive = true;
    }
  EXPECT_TRUE(saw_non_primitive);
}

TEST(FParam, IntegralForAllPositiveArguments) {
  // m odd: x = m(2n + 1), (x^2 - m^2) / 2m = 2mn(n + 1).
  // m even: x = m(n + 1), (x^2 - m^2) / 2m = m(n^2 + 2n) / 2.
  for (int m = 1; m <= 40; ++m)
    for (int n = 1; n <= 40; ++n) ASSERT_NO_THROW(f_param(m, n)) << m << "," << n;
  EXPECT_THROW(f_param(0, 1), error);
  EXPECT_THROW(f_param(1, 0), error);
}

TEST(Radii, Inradius) {
  EXPECT_EQ(inradius(ppt::root()), 1);
  EXPECT_EQ(inradius(ppt::make(21, 20, 29)), 6);
  EXPECT_EQ(inradius(ppt::make(13, 84, 85)), 6);
}

TEST(Radii, Circumradius) {
  EXPECT_EQ(circumradius(ppt::root()), rational(5, 2));
  EXPECT_EQ(circumradius(ppt::make(21, 20, 29)), rational(29, 2));
  EXPECT_EQ(circumradius(ppt::make(15, 8, 17)), rational(17, 2));
  EXPECT_EQ(to_string(circumradius(ppt::root())), "5/2");
}

TEST(Radii, InvariantsOverEuclidPairs) {
  for (int m = 2; m <= 60; ++m)
    for (int n = 1; n < m; ++n)
      if (auto p = euclid_pair::try_make(m, n)) {
        const ppt t = from_euclid(*p);
        ASSERT_GE(inradius(t), 1);
        ASSERT_EQ(2 * circumradius(t), rational(t.z()));
        ASSERT_EQ(inradius(t), p->n() * (p->m() - p->n()));
      }
}
