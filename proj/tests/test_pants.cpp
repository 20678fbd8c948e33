#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lagpants/errors.hpp"
#include "lagpants/pants.hpp"

using namespace lagpants;

namespace {

Vec v2(double a, double b) {
  Vec y(2);
  y << a, b;
  return y;
}

Vec v3(double a, double b, double c) {
  Vec y(3);
  y << a, b, c;
  return y;
}

}  // namespace

TEST(Pants, PotentialAtCentre) {
  PantsMap pm(1);
  Vec c = v2(kPi / 6, kPi / 6);
  EXPECT_NEAR(pm.F(c), std::sqrt(1.0 / 8.0), 1e-15);
  EXPECT_NEAR(pm.F(Vec(-c)), -std::sqrt(1.0 / 8.0), 1e-15);
  EXPECT_LT(pm.h(c).norm(), 1e-14);
  PantsMap scaled(1, 3.0);
  EXPECT_NEAR(scaled.F(c), 3 * std::sqrt(1.0 / 8.0), 1e-14);
}

TEST(Pants, GradientMatchesFiniteDifference) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> U(0.1, 0.6);
  for (int n : {1, 2}) {
    PantsMap pm(n, 1.7);
    for (int i = 0; i < 50; ++i) {
      Vec y(n + 1);
      for (int j = 0; j <= n; ++j) y(j) = U(rng) * kHalfPi / (n + 1) * 1.5;
      if (i % 2) y = -y;
      Vec g = pm.h(y);
      Mat H = pm.hessian(y);
      for (int j = 0; j <= n; ++j) {
        Vec a = y, b = y;
        a(j) += 1e-6;
        b(j) -= 1e-6;
        EXPECT_NEAR((pm.F(a) - pm.F(b)) / 2e-6, g(j), 1e-7);
        Vec dh = (pm.h(a) - pm.h(b)) / 2e-6;
        for (int k = 0; k <= n; ++k) EXPECT_NEAR(dh(k), H(k, j), 1e-6);
      }
    }
  }
}

TEST(Pants, HessianIsOdd) {
  PantsMap pm(2);
  Vec y = v3(0.3, 0.2, 0.5);
  EXPECT_LT((pm.hessian(Vec(-y)) + pm.hessian(y)).norm(), 1e-12);
  Eigen::SelfAdjointEigenSolver<Mat> es(pm.hessian(y));
  EXPECT_LT(es.eigenvalues().maxCoeff(), 0.0);
}

TEST(Pants, ChartLimitAtVertex) {
  PantsMap pm(1);
  ChartPoint c{0, 1, Vec::Constant(1, 1.0), 0.0};
  Vec x = pm.h(c);
  EXPECT_NEAR(x(0), 0.5, 1e-12);
  EXPECT_NEAR(x(1), 0.5, 1e-12);
  EXPECT_LT((h_exceptional(1, Vec::Constant(1, 1.0)) - x).norm(), 1e-12);
  // Points on the exceptional curve land on S_0.
  for (double a : {0.2, 1.0, 4.0}) EXPECT_NEAR(boundary_residual(h_exceptional(1, Vec::Constant(1, a)), 0), 0.0, 1e-12);
}

TEST(Pants, ChartAgreesWithTorusAwayFromVertex) {
  PantsMap pm(1);
  ChartPoint c{0, 1, Vec::Constant(1, 0.7), 0.05};
  Vec y = pm.to_torus(c);
  EXPECT_LT((pm.h(c) - pm.h(y)).norm(), 1e-10);
  EXPECT_NEAR(pm.F(c), pm.F(y), 1e-12);
}

TEST(Pants, Region) {
  RegionClass r = region_membership(v2(0.25, 0.25));
  EXPECT_EQ(r.inside, std::vector<int>{0});
  EXPECT_TRUE(region_membership(v2(1, 1)).outside());
  EXPECT_TRUE(region_membership(v2(-1, 0.5)).outside());
  EXPECT_EQ(region_membership(v2(-1, -1)).inside, (std::vector<int>{1, 2}));  // shared leg
  RegionClass b = region_membership(v2(0.5, 0.5));
  EXPECT_NE(std::find(b.on_boundary.begin(), b.on_boundary.end(), 0), b.on_boundary.end());
  EXPECT_NEAR(boundary_residual(v2(0.5, 0.5), 0), 0.0, 1e-15);
  // H_1 = R*_1 H_0, with R*_1 (x1, x2) = (-x1, x2 - x1).
  EXPECT_EQ(region_membership(v2(-0.25, 0.0)).inside, std::vector<int>{1});
}

TEST(Pants, CellClassification) {
  CellClass c = cell_classify(1, v2(0.1, 0.2));
  EXPECT_TRUE(c.plus);
  std::vector<std::vector<int>> want{{1}, {1, 2}};
  auto got = c.W;
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, want);
  EXPECT_TRUE(in_W(1, v2(0.1, 0.2), {1}));
  EXPECT_FALSE(in_W(1, v2(0.1, 0.2), {0}));

  CellClass m = cell_classify(1, v2(-0.1, -0.2));
  EXPECT_FALSE(m.plus);

  CellClass centre = cell_classify(1, v2(kPi / 6, kPi / 6));
  EXPECT_EQ(centre.W.size(), 6u);
  EXPECT_EQ(centre.delta_boundary.size(), 3u);
}

TEST(Pants, VRegions) {
  EXPECT_TRUE(in_V(v2(-1, -2), {0}));
  EXPECT_FALSE(in_V(v2(1, -2), {0}));
  EXPECT_TRUE(in_V(v2(3, 1), {1}));
}

TEST(Pants, FiberSolveRoundTrip) {
  PantsMap pm(1);
  ProjectionPair pp = project(1, {1}, 0);
  FlatTorus torus{2};
  for (Vec q : {v2(0.2, 0.5), v2(0.05, 0.9), v2(-0.3, -0.4)}) {
    Vec x = pp.project_base(pm.h(q));
    Vec yf = pp.project_torus(q);
    FiberSolution s = fiber_solve(pm, pp, x, yf);
    EXPECT_LT(torus.distance(s.y, q), 1e-9);
    LegendreValue g = legendre_G(pm, pp, x, yf);
    double diff = std::remainder(g.dG_dx(0) - q(pp.free_coords()[0]), kPi);
    EXPECT_NEAR(diff, 0.0, 1e-9);
  }
}

TEST(Pants, FullLegendreInvertsGradient) {
  PantsMap pm(2);
  Vec y = v3(0.4, 0.3, 0.2);
  LegendreValue g = legendre_full(pm, pm.h(y));
  EXPECT_LT((g.q - y).norm(), 1e-9);
  EXPECT_NEAR(g.G, pm.h(y).dot(y) - pm.F(y), 1e-9);
}

TEST(Pants, DecompositionConstants) {
  namespace d = decomposition;
  EXPECT_NEAR(d::z_of_t(1.0 / 9.0), 1.0 / 3.0, 1e-14);
  EXPECT_THROW(d::z_of_t(0.1), DomainError);
  EXPECT_NEAR(boundary_residual(d::q(0), 0), 0.0, 1e-14);
  Vec t = d::tau_intersection();
  EXPECT_NEAR(t(0), 1.0 / 6.0, 1e-14);
  EXPECT_NEAR(t(1), 1.0 / 6.0, 1e-14);
  EXPECT_NEAR(d::section_coordinate(d::q(0)), 1.0 / 3.0 - 2.0 / 9.0, 1e-14);
  for (double z : {0.2, 0.5, 1.0}) {
    double tt = (1 - 18 * z * z * z) / (27 * z * z);
    if (tt >= 1.0 / 9.0) EXPECT_NEAR(d::z_of_t(tt), z, 1e-12);
  }
}

TEST(Pants, WrongDimensionThrows) {
  PantsMap pm(1);
  EXPECT_THROW(pm.F(v3(0.1, 0.1, 0.1)), InputError);
  EXPECT_THROW(h_exceptional(2, Vec::Constant(1, 1.0)), InputError);
  EXPECT_THROW(h_exceptional(1, Vec::Constant(1, -1.0)), DomainError);
}
