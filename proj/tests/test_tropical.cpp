#include <gtest/gtest.h>

#include <set>

#include "lagpants/errors.hpp"
#include "lagpants/tropical.hpp"

using namespace lagpants;

namespace {

QPoint q(long long a, long long b, long long d = 1) { return {Rational(a, d), Rational(b, d)}; }

PlaneCurve triangle_curve() {
  auto P = LatticePolytope::from_points({{0, 0}, {1, 2}, {2, 1}});
  LiftingFunction nu;
  for (const auto& p : P.lattice_points) nu.values[p] = p == IPoint{0, 0} ? 1 : 0;
  return plane_curve(tropical_hypersurface(regular_subdivision(P, nu)));
}

PlaneCurve standard_line() { return make_curve({q(0, 0)}, {}, {{0, {1, 0}}, {0, {0, 1}}, {0, {-1, -1}}}); }

std::set<IPoint> as_set(const std::vector<IPoint>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Tropical, Example24Curve) {
  PlaneCurve c = triangle_curve();
  std::set<QPoint> verts(c.vertices.begin(), c.vertices.end());
  EXPECT_EQ(verts, (std::set<QPoint>{q(0, 0), q(1, 0), q(0, 1)}));
  // Three bounded edges form a cycle: x1 = 0, x2 = 0 and the segment (1,0)-(0,1).
  EXPECT_EQ(c.bounded_count(), 3u);
  std::map<QPoint, IPoint> rays;
  for (const auto& e : c.edges) {
    EXPECT_EQ(e.weight, 1);
    if (e.is_ray()) rays[c.vertices[static_cast<std::size_t>(e.tail)]] = e.direction;
  }
  EXPECT_EQ(rays[q(0, 0)], (IPoint{-1, -1}));
  EXPECT_EQ(rays[q(1, 0)], (IPoint{2, -1}));
  EXPECT_EQ(rays[q(0, 1)], (IPoint{-1, 2}));
  EXPECT_TRUE(is_smooth(c));
  EXPECT_TRUE(balancing_check(c));
}

TEST(Tropical, StandardLineFromSimplex) {
  auto P = LatticePolytope::from_points({{0, 0}, {1, 0}, {0, 1}});
  LiftingFunction nu;
  for (const auto& p : P.lattice_points) nu.values[p] = 0;
  PlaneCurve c = plane_curve(tropical_hypersurface(regular_subdivision(P, nu)));
  ASSERT_EQ(c.vertices.size(), 1u);
  EXPECT_EQ(c.vertices[0], q(0, 0));
  std::vector<IPoint> dirs;
  for (const auto& e : c.edges) dirs.push_back(e.direction);
  EXPECT_EQ(as_set(dirs), (std::set<IPoint>{{1, 0}, {0, 1}, {-1, -1}}));
}

TEST(Tropical, WeightTwoLine) {
  auto P = LatticePolytope::from_points({{0, 0}, {2, 0}});
  LiftingFunction nu;
  for (const auto& p : P.lattice_points) nu.values[p] = 0;
  PlaneCurve c = plane_curve(tropical_hypersurface(regular_subdivision(P, nu)));
  ASSERT_EQ(c.edges.size(), 1u);
  EXPECT_TRUE(c.edges[0].is_line());
  EXPECT_EQ(c.edges[0].weight, 2);
  EXPECT_EQ(primitive(c.edges[0].direction), (IPoint{0, 1}));
  EXPECT_FALSE(is_smooth(c));
}

TEST(Tropical, Smoothness) {
  PlaneCurve fig8 = make_curve({q(0, 0)}, {}, {{0, {1, 1}}, {0, {-2, 1}}, {0, {1, -2}}});
  EXPECT_FALSE(is_smooth(fig8));
  EXPECT_TRUE(balancing_check(fig8));
  EXPECT_TRUE(is_smooth(standard_line()));
}

TEST(Tropical, Balancing) {
  EXPECT_TRUE(balancing_check(standard_line()));
  PlaneCurve bad = make_curve({q(0, 0)}, {}, {{0, {1, 0}, 1}, {0, {0, 1}, 1}, {0, {-1, -1}, 2}});
  EXPECT_FALSE(balancing_check(bad));
}

TEST(Tropical, TangentLines) {
  PlaneCurve c = triangle_curve();
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    TropicalLine l = tangent_line(c, v);
    EXPECT_TRUE(balancing_check(l));
    if (c.vertices[v] == q(0, 0)) EXPECT_EQ(as_set(l.generators), (std::set<IPoint>{{0, 1}, {1, 0}, {-1, -1}}));
    if (c.vertices[v] == q(1, 0)) EXPECT_EQ(as_set(l.generators), (std::set<IPoint>{{-1, 0}, {2, -1}, {-1, 1}}));
  }
}

TEST(Tropical, AdaptedFrameSendsStarToStandardLine) {
  PlaneCurve c = triangle_curve();
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    TropicalLine l = tangent_line(c, v);
    AffineFrame f = adapted_frame(l);
    EXPECT_EQ(std::abs(det(f.A)), 1);
    std::vector<IPoint> img;
    for (const auto& u : l.generators) img.push_back(f.direction_to_local(u));
    EXPECT_EQ(as_set(img), (std::set<IPoint>{{1, 0}, {0, 1}, {-1, -1}}));
    EXPECT_EQ(f.to_local(l.center), q(0, 0));
    QPoint x = q(3, -7, 5);
    EXPECT_EQ(f.from_local(f.to_local(x)), x);
  }
}

TEST(Tropical, StandardLineFrameIsIdentity) {
  AffineFrame f = adapted_frame(tangent_line(standard_line(), 0));
  EXPECT_EQ(f.A, identity_matrix(2));
}

TEST(Tropical, MalformedCurve) {
  EXPECT_THROW(make_curve({q(0, 0)}, {{0, 3}}, {}), InputError);
  EXPECT_THROW(make_curve({q(0, 0)}, {}, {{0, {1, 0}, 0}}), InputError);
}
