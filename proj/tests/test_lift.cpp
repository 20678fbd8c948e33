#include <gtest/gtest.h>

#include <sstream>

#include "lagpants/errors.hpp"
#include "lagpants/lift.hpp"
#include "lagpants/tools/io.hpp"

using namespace lagpants;

namespace {

PlaneCurve fixture(const std::string& name) {
  return tools::fixture_curve(tools::read_fixture(std::string(LAGPANTS_FIXTURE_DIR) + "/" + name + ".json", false));
}

}  // namespace

TEST(Lift, PLTopologyOfExample) {
  PLLift pl = pl_lift(fixture("triangle_curve"));
  EXPECT_EQ(pl.euler, -3);
  EXPECT_EQ(pl.punctures, 3);
  EXPECT_EQ(pl.genus, 1);
  EXPECT_EQ(pl.components, 1);
  EXPECT_EQ(pl.vertex_pieces.size(), 3u);
}

TEST(Lift, PLTopologyOfLines) {
  PLLift a = pl_lift(fixture("standard_line"));
  EXPECT_EQ(a.euler, -1);
  EXPECT_EQ(a.punctures, 3);
  EXPECT_EQ(a.genus, 0);
  PLLift b = pl_lift(fixture("weighted_line_w2"));
  EXPECT_EQ(b.euler, -4);
  EXPECT_EQ(b.punctures, 6);
  EXPECT_EQ(b.genus, 0);
  PLLift c = pl_lift(fixture("genus1_vertex"));
  EXPECT_EQ(c.euler, -3);
  EXPECT_EQ(c.punctures, 3);
  EXPECT_EQ(c.genus, 1);
}

TEST(Lift, CurveTopologyAgreesWithPL) {
  PlaneCurve c = fixture("triangle_curve");
  CurveTopology t = curve_topology(c);
  EXPECT_EQ(t.euler, pl_lift(c).euler);
  EXPECT_EQ(t.punctures, 3);
}

TEST(Lift, Exactness) {
  PlaneCurve c = fixture("triangle_curve");
  ExactnessReport r = exactness_check(c);
  EXPECT_FALSE(r.exact);
  ASSERT_EQ(r.constants.size(), c.edges.size());
  bool found = false;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    IPoint d = primitive(e.direction);
    if (!((d[0] == 2 && d[1] == -1) || (d[0] == -2 && d[1] == 1))) continue;
    QPoint b = c.vertices[static_cast<std::size_t>(e.tail)];
    if (b[0] + 2 * b[1] != 1) continue;
    found = true;
    EXPECT_EQ(abs(r.constants[i]), Rational(1));
  }
  EXPECT_TRUE(found);
  EXPECT_TRUE(exactness_check(fixture("standard_line")).exact);
}

TEST(Lift, Cutoff) {
  const Cutoff& c = cutoff();
  EXPECT_DOUBLE_EQ(c.value(-0.5), 1.0);
  EXPECT_DOUBLE_EQ(c.value(1.5), 0.0);
  double prev = 1.0;
  for (int i = 0; i <= 100; ++i) {
    double v = c.value(i / 100.0);
    EXPECT_LE(v, prev + 1e-15);
    prev = v;
  }
  double s = 0.3;
  EXPECT_NEAR((c.value(s + 1e-6) - c.value(s - 1e-6)) / 2e-6, c.d1(s), 1e-5);
}

TEST(Lift, EdgeFiber) {
  EdgeFiber f{{2, -1}, {1, 2}, 0.3, 2};
  for (long long k : {0, 1})
    for (double phi : {0.0, 1.0, 2.5}) EXPECT_LT(f.distance(f.point(phi, k)), 1e-12);
}

TEST(Lift, DefaultScheduleIsValid) {
  PlaneCurve c = fixture("triangle_curve");
  GluingSchedule s = default_schedule(c);
  EXPECT_NO_THROW(validate(s, c, 1.0));
  EXPECT_NO_THROW(validate(s, c, 0.1));
  EXPECT_EQ(s.vertices.size(), 3u);
  EXPECT_EQ(s.legs.size(), 9u);
  for (const auto& l : s.legs) {
    EXPECT_LT(l.r1, l.r2);
    EXPECT_LT(l.r2, l.r3);
    EXPECT_LT(l.r3, l.r4);
  }
  EXPECT_GE(s.truncation, 3.0);
  GluingSchedule bad = s;
  bad.legs[0].r2 = bad.legs[0].r1 / 2;
  EXPECT_THROW(validate(bad, c, 1.0), ConfigError);
}

TEST(Lift, SmoothLiftOfLineIsLagrangian) {
  PlaneCurve c = fixture("standard_line");
  GluingSchedule s = default_schedule(c);
  LagrangianMesh m = smooth_lift(c, 1.0, s, 32);
  EXPECT_GT(m.count(PieceKind::pants), 0u);
  EXPECT_GT(m.count(PieceKind::collar), 0u);
  EXPECT_GT(m.count(PieceKind::cylinder), 0u);
  EXPECT_LT(symplectic_residual(m), 1e-6);
  EXPECT_EQ(symplectic_residual(m, PieceKind::cylinder), 0.0);
  std::ostringstream os;
  m.write_off(os, ProjectionMode::x1_x2_y1);
  EXPECT_EQ(os.str().rfind("OFF", 0), 0u);
}

TEST(Lift, HausdorffShrinksWithScale) {
  PlaneCurve c = fixture("standard_line");
  GluingSchedule s = default_schedule(c);
  PLLift pl = pl_lift(c);
  double a = hausdorff_distance(smooth_lift(c, 1.0, s, 32), pl, 32);
  double b = hausdorff_distance(smooth_lift(c, 0.25, s, 32), pl, 32);
  EXPECT_LT(b, a);
}

TEST(Lift, Twist) {
  PlaneCurve c = fixture("triangle_curve");
  GluingSchedule s = default_schedule(c);
  PLLift pl = pl_lift(c);
  TwistData t;
  t.winding[0] = 2;
  t.winding[1] = -1;
  EXPECT_EQ(twist(pl, t, s), 1);
  EXPECT_EQ(pl.edge_pieces[0].winding, 2);
  LagrangianMesh m = smooth_lift(c, 1.0, s, 16, &t);
  EXPECT_LT(symplectic_residual(m), 1e-6);
  TwistData bad;
  bad.winding[99] = 1;
  EXPECT_THROW(twist(pl, bad, s), InputError);
}
