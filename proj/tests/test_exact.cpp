#include <gtest/gtest.h>

#include "lagpants/errors.hpp"
#include "lagpants/exact.hpp"

using namespace lagpants;

TEST(Exact, ParseRational) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-2/5"), Rational(-2, 5));
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_THROW(parse_rational("x"), InputError);
}

TEST(Exact, Primitive) {
  EXPECT_EQ(primitive(IPoint{4, -6}), (IPoint{2, -3}));
  EXPECT_EQ(primitive(QPoint{Rational(1, 2), Rational(1, 3)}), (IPoint{3, 2}));
  EXPECT_THROW(primitive(IPoint{0, 0}), Error);
}

TEST(Exact, UnimodularInverse) {
  IMatrix a = {{2, 1}, {1, 1}};
  EXPECT_EQ(det(a), 1);
  EXPECT_EQ(multiply(a, inverse_unimodular(a)), identity_matrix(2));
}

TEST(Exact, Nullspace) {
  QMatrix a = {{Rational(1), Rational(2), Rational(3)}};
  auto ns = nullspace(a, 3);
  ASSERT_EQ(ns.size(), 2u);
  for (const auto& v : ns) EXPECT_EQ(dot(a[0], v), 0);
}

TEST(Exact, AngleOrder) {
  EXPECT_TRUE(angle_less({1, 0}, {0, 1}));
  EXPECT_TRUE(angle_less({0, 1}, {-1, -1}));
  EXPECT_FALSE(angle_less({-1, -1}, {1, 0}));
}
