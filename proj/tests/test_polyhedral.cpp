#include <gtest/gtest.h>

#include <random>

#include "lagpants/errors.hpp"
#include "lagpants/polyhedral.hpp"

using namespace lagpants;

namespace {

Subdivision triangle_curve() {
  auto P = LatticePolytope::from_points({{0, 0}, {1, 2}, {2, 1}});
  LiftingFunction nu;
  for (const auto& p : P.lattice_points) nu.values[p] = p == IPoint{0, 0} ? 1 : 0;
  return regular_subdivision(P, nu);
}

std::set<std::set<IPoint>> top_cells(const Subdivision& s) {
  std::set<std::set<IPoint>> out;
  for (auto i : s.top_cells()) {
    auto v = s.cell_vertices(i);
    out.insert({v.begin(), v.end()});
  }
  return out;
}

}  // namespace

TEST(Polyhedral, LatticePoints) {
  auto P = LatticePolytope::from_points({{0, 0}, {1, 2}, {2, 1}});
  EXPECT_EQ(P.lattice_points.size(), 4u);
  EXPECT_EQ(P.vertices.size(), 3u);
}

TEST(Polyhedral, Example24Triangulation) {
  auto s = triangle_curve();
  std::set<std::set<IPoint>> want = {{{0, 0}, {1, 1}, {2, 1}}, {{0, 0}, {1, 1}, {1, 2}}, {{1, 1}, {2, 1}, {1, 2}}};
  EXPECT_EQ(top_cells(s), want);
  EXPECT_TRUE(is_unimodal(s));
}

TEST(Polyhedral, ConstantLiftIsOneCell) {
  auto P = LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}});
  LiftingFunction nu;
  for (const auto& p : P.lattice_points) nu.values[p] = 0;
  auto s = regular_subdivision(P, nu);
  EXPECT_EQ(s.top_cells().size(), 1u);
  EXPECT_TRUE(is_unimodal(s));
}

TEST(Polyhedral, SegmentSplit) {
  auto P = LatticePolytope::from_points({{0, 0}, {2, 0}});
  LiftingFunction nu;
  nu.values = {{{0, 0}, 0}, {{1, 0}, -1}, {{2, 0}, 0}};
  auto s = regular_subdivision(P, nu);
  EXPECT_EQ(s.top_cells().size(), 2u);
}

TEST(Polyhedral, NonUnimodalCell) {
  auto P = LatticePolytope::from_points({{0, 0}, {2, 1}, {1, 2}});
  LiftingFunction nu;
  for (const auto& p : P.lattice_points) nu.values[p] = 0;
  EXPECT_FALSE(is_unimodal(regular_subdivision(P, nu)));
}

TEST(Polyhedral, MissingLiftingValue) {
  auto P = LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}});
  LiftingFunction nu;
  nu.values[{0, 0}] = 0;
  EXPECT_THROW(regular_subdivision(P, nu), InputError);
}

TEST(Polyhedral, LegendreMatchesBruteForce) {
  auto s = triangle_curve();
  auto d = discrete_legendre(s);
  EXPECT_EQ(d.nu_check.pieces.size(), 4u);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> U(-400, 400);
  for (int i = 0; i < 10000; ++i) {
    QPoint m = {Rational(U(rng), 97), Rational(U(rng), 89)};
    Rational best = 1000000;
    for (const auto& p : s.polytope.lattice_points) {
      Rational v = dot(to_q(p), m) + s.lifting.at(p);
      if (v < best) best = v;
    }
    ASSERT_EQ(d.nu_check(m), best);
  }
}

TEST(Polyhedral, DualDimensions) {
  auto s = triangle_curve();
  auto d = discrete_legendre(s);
  for (std::size_t i = 0; i < s.cells.size(); ++i) EXPECT_EQ(s.cells[i].dim + d.dual[i].dim, 2);
}

TEST(Polyhedral, DualEdgeOrthogonality) {
  auto s = triangle_curve();
  auto d = discrete_legendre(s);
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    if (s.cells[i].dim != 1) continue;
    auto v = s.cell_vertices(i);
    QPoint diff = to_q({v[0][0] - v[1][0], v[0][1] - v[1][1]});
    Rational rhs = Rational(s.lifting.at(v[1]) - s.lifting.at(v[0]));
    for (const auto& x : d.dual[i].vertices) EXPECT_EQ(dot(diff, x), rhs);
  }
}
