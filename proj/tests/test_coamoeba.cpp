#include <gtest/gtest.h>

#include <random>

#include "lagpants/coamoeba.hpp"
#include "lagpants/errors.hpp"

using namespace lagpants;

namespace {

Vec v2(double a, double b) {
  Vec y(2);
  y << a, b;
  return y;
}

}  // namespace

TEST(Coamoeba, VertexCount) {
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(standard_coamoeba(n).vertex_count(), n + 2);
}

TEST(Coamoeba, CircleForNZero) {
  Coamoeba c = standard_coamoeba(0);
  for (double y : {0.1, 0.7, 1.5, 2.9}) {
    Vec p(1);
    p << y;
    EXPECT_TRUE(in_coamoeba(c, p));
  }
}

TEST(Coamoeba, Membership) {
  Coamoeba c = standard_coamoeba(1);
  EXPECT_EQ(membership(c, v2(kPi / 6, kPi / 6)).kind, CoamoebaClass::interior_plus);
  EXPECT_EQ(membership(c, v2(-kPi / 6, -kPi / 6)).kind, CoamoebaClass::interior_minus);
  Membership v = membership(c, v2(kHalfPi, 0));
  EXPECT_EQ(v.kind, CoamoebaClass::vertex);
  EXPECT_EQ(v.vertex, 1);
  Membership f = membership(c, v2(kPi / 4, kPi / 4));
  EXPECT_EQ(f.kind, CoamoebaClass::face);
  EXPECT_EQ(f.face, std::vector<int>{0});
  EXPECT_FALSE(in_coamoeba(c, v2(kPi / 4, kPi / 4)));
}

TEST(Coamoeba, ExactMembership) {
  Coamoeba c = standard_coamoeba(1);
  EXPECT_EQ(membership_exact(c, {Rational(1, 4), Rational(1, 4)}).kind, CoamoebaClass::face);
  EXPECT_EQ(membership_exact(c, {Rational(1, 2), Rational(0)}).kind, CoamoebaClass::vertex);
  EXPECT_EQ(membership_exact(c, {Rational(1, 6), Rational(1, 6)}).kind, CoamoebaClass::interior_plus);
}

TEST(Coamoeba, MembershipIsInvolutionEquivariant) {
  Coamoeba c = standard_coamoeba(1);
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> U(0, kPi);
  for (int i = 0; i < 1000; ++i) {
    Vec y = v2(U(rng), U(rng));
    auto a = membership(c, y).kind, b = membership(c, Vec(-y)).kind;
    if (a == CoamoebaClass::interior_plus) EXPECT_EQ(b, CoamoebaClass::interior_minus);
    if (a == CoamoebaClass::outside) EXPECT_EQ(b, CoamoebaClass::outside);
  }
}

TEST(Coamoeba, Symmetries) {
  TorusAffineMap r1 = symmetry(1, 1);
  EXPECT_EQ(r1.base, (IMatrix{{-1, 0}, {-1, 1}}));  // R*_1(x1, x2) = (-x1, x2 - x1)
  for (int n = 1; n <= 2; ++n) {
    Coamoeba c = standard_coamoeba(n);
    for (int k = 1; k <= n + 1; ++k) {
      TorusAffineMap r = symmetry(n, k);
      EXPECT_EQ(multiply(r.base, r.base), identity_matrix(static_cast<std::size_t>(n + 1)));
      EXPECT_LT(c.torus.distance(r.apply(c.vertex(0)), c.vertex(k)), 1e-14);
    }
  }
}

TEST(Coamoeba, BlowupChart) {
  Coamoeba c = standard_coamoeba(1);
  BlowupChart b = blowup_chart(c, 0);
  Vec a(1);
  a << 1.0;
  Vec y = b.to_torus(a, 0.1);
  EXPECT_NEAR(y(0), 0.1, 1e-15);
  EXPECT_NEAR(y(1), 0.1, 1e-15);
  EXPECT_EQ(membership(c, b.to_torus(a, -0.1)).kind, CoamoebaClass::interior_minus);
  EXPECT_LT((b.to_torus(a, -0.1) + y).norm(), 1e-15);
  a << 0.4;
  auto [alpha, t] = b.from_torus(b.to_torus(a, 0.2));
  EXPECT_NEAR(alpha(0), 0.4, 1e-14);
  EXPECT_NEAR(t, 0.2, 1e-14);
}

TEST(Coamoeba, EdgeCellIsCircle) {
  CellCoamoeba e = cell_coamoeba({{1, 1}, {2, 1}});
  EXPECT_EQ(e.dim, 1);
  for (double s : {0.1, 0.5, 0.9}) {
    Vec y = v2(kHalfPi * (1 + s), kHalfPi);
    EXPECT_TRUE(e.contains(y));
    EXPECT_TRUE(e.contains(Vec(-y)));
  }
  EXPECT_FALSE(e.contains(v2(kHalfPi * 1.5, kHalfPi * 1.2)));
}

TEST(Coamoeba, SimplexCellIsStandardCoamoeba) {
  CellCoamoeba e = cell_coamoeba({{0, 0}, {1, 0}, {0, 1}});
  Coamoeba c = standard_coamoeba(1);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> U(0, kPi);
  for (int i = 0; i < 2000; ++i) {
    Vec y = v2(U(rng), U(rng));
    auto k = membership(c, y).kind;
    if (k == CoamoebaClass::interior_plus || k == CoamoebaClass::interior_minus) EXPECT_TRUE(e.contains(y));
    if (k == CoamoebaClass::outside) EXPECT_FALSE(e.contains_closed(y));
  }
}

TEST(Coamoeba, CoveringModels) {
  TropicalLine std_line{{Rational(0), Rational(0)}, {{1, 0}, {0, 1}, {-1, -1}}, {1, 1, 1}, {}};
  CoveringModel m1 = covering_coamoeba(std_line);
  EXPECT_EQ(m1.degree, 1);
  EXPECT_EQ(m1.genus, 0);
  EXPECT_EQ(m1.punctures, 3);

  TropicalLine fig8{{Rational(0), Rational(0)}, {{1, 1}, {-2, 1}, {1, -2}}, {1, 1, 1}, {}};
  CoveringModel m3 = covering_coamoeba(fig8);
  EXPECT_EQ(m3.degree, 3);
  EXPECT_EQ(m3.genus, 1);
  EXPECT_EQ(m3.punctures, 3);

  TropicalLine w2{{Rational(0), Rational(0)}, {{1, 0}, {0, 1}, {-1, -1}}, {2, 2, 2}, {}};
  CoveringModel m4 = covering_coamoeba(w2);
  EXPECT_EQ(m4.degree, 4);
  EXPECT_EQ(m4.genus, 0);
  EXPECT_EQ(m4.punctures, 6);
  EXPECT_EQ(m4.euler, -4);

  TropicalLine bad{{Rational(0), Rational(0)}, {{1, 0}, {0, 1}, {-1, -1}}, {1, 1, 2}, {}};
  EXPECT_THROW(covering_coamoeba(bad), InputError);
}

TEST(Coamoeba, FourValentModel) {
  // Centre of a cell, (s, d) = (pi/2, 0).
  Vec c = v2(kPi / 4, kPi / 4);
  ASSERT_TRUE(in_four_valent_coamoeba(c));
  EXPECT_LT(four_valent_gradient(c).norm(), 1e-12);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> U(0, kPi);
  int checked = 0;
  while (checked < 200) {
    Vec y = v2(U(rng), U(rng));
    if (!in_four_valent_coamoeba(y, -1e-3)) continue;
    // Even under the involution with this sign marking.
    EXPECT_NEAR(four_valent_potential(Vec(-y)), four_valent_potential(y), 1e-12);
    Vec g = four_valent_gradient(y);
    for (int i = 0; i < 2; ++i) {
      Vec a = y, b = y;
      a(i) += 1e-6;
      b(i) -= 1e-6;
      EXPECT_NEAR((four_valent_potential(a) - four_valent_potential(b)) / 2e-6, g(i), 1e-5);
    }
    ++checked;
  }
}
