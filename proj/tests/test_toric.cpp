#include <gtest/gtest.h>

#include <map>

#include "lagpants/errors.hpp"
#include "lagpants/toric.hpp"
#include "lagpants/tools/io.hpp"

using namespace lagpants;

namespace {

tools::Fixture load(const std::string& name) {
  return tools::read_fixture(std::string(LAGPANTS_FIXTURE_DIR) + "/" + name + ".json", false);
}

std::vector<QPoint> qs(std::initializer_list<std::pair<long long, long long>> pts) {
  std::vector<QPoint> out;
  for (auto [a, b] : pts) out.push_back({Rational(a), Rational(b)});
  return out;
}

std::map<std::pair<long long, Rational>, int> counts(const MonotoneReport& r, const std::string& prefix = "") {
  std::map<std::pair<long long, Rational>, int> out;
  for (const auto& e : r.entries)
    if (e.label.rfind(prefix, 0) == 0) ++out[{e.mu, e.omega}];
  return out;
}

}  // namespace

TEST(Toric, DelzantTriangles) {
  EXPECT_TRUE(delzant_check(DelzantPolygon::from_vertices(qs({{0, 0}, {3, 0}, {0, 3}}))));
  EXPECT_TRUE(delzant_check(DelzantPolygon::from_vertices(qs({{0, 0}, {2, 0}, {2, 2}, {0, 2}}))));
  DelzantPolygon t = DelzantPolygon::from_vertices(qs({{0, 0}, {2, 0}, {0, 1}}));
  EXPECT_FALSE(delzant_check(t));
  std::size_t at = 0;
  for (std::size_t i = 0; i < t.vertices.size(); ++i)
    if (t.vertices[i] == QPoint{Rational(2), Rational(0)}) at = i;
  EXPECT_TRUE(delzant_vertex_check(t, at));
}

TEST(Toric, PolygonMembership) {
  DelzantPolygon p = DelzantPolygon::from_vertices(qs({{0, 0}, {3, 0}, {0, 3}}));
  EXPECT_TRUE(p.contains({Rational(1), Rational(1)}));
  EXPECT_FALSE(p.contains({Rational(2), Rational(2)}));
  EXPECT_TRUE(p.on_boundary({Rational(3, 2), Rational(3, 2)}));
  EXPECT_EQ(p.edges.size(), 3u);
  DelzantPolygon q = DelzantPolygon::from_chain({0, 1}, qs({{0, 0}}), {1, 0});
  EXPECT_FALSE(q.closed);
  EXPECT_TRUE(q.contains({Rational(5), Rational(7)}));
  EXPECT_FALSE(q.contains({Rational(-1), Rational(7)}));
}

TEST(Toric, TorusInProjectivePlane) {
  auto f = load("p2_torus");
  auto hits = classify_boundary(*f.curve, *f.polygon);
  EXPECT_EQ(hits.size(), 3u);
  for (const auto& h : hits) {
    EXPECT_EQ(h.kind, HitKind::smooth_point);
    EXPECT_EQ(h.index, 1);
  }
  LiftTopology t = lift_topology(*f.curve, *f.polygon);
  EXPECT_TRUE(t.orientable);
  EXPECT_EQ(t.euler, 0);
  EXPECT_EQ(t.genus, 1);
}

TEST(Toric, NonOrientableLift) {
  auto f = load("moebius_chain");
  auto hits = classify_boundary(*f.curve, *f.polygon);
  int moebius = 0;
  for (const auto& h : hits)
    if (h.kind == HitKind::moebius) {
      ++moebius;
      EXPECT_EQ(h.index, 2);
    }
  EXPECT_EQ(moebius, 2);
  LiftTopology t = lift_topology(*f.curve, *f.polygon);
  EXPECT_FALSE(t.orientable);
  EXPECT_EQ(t.euler, -4);
  EXPECT_TRUE(t.audin_ok);
}

TEST(Toric, MonotoneProjectivePlane) {
  auto f = load("p2_monotone");
  MonotoneReport r = monotone_report(*f.curve, *f.polygon, default_disk_classes(*f.polygon));
  auto c = counts(r);
  EXPECT_EQ((c[{6, Rational(3)}]), 1);
  EXPECT_EQ((c[{2, Rational(1)}]), 3);
  EXPECT_EQ((c[{0, Rational(0)}]), 1);
  EXPECT_TRUE(r.proportional);
  ASSERT_TRUE(r.factor.has_value());
  EXPECT_EQ(*r.factor, Rational(2));
}

TEST(Toric, MonotoneQuadric) {
  auto f = load("p1p1_monotone");
  MonotoneReport r = monotone_report(*f.curve, *f.polygon, default_disk_classes(*f.polygon));
  auto c = counts(r, "beta_");
  EXPECT_EQ((c[{2, Rational(1)}]), 4);
  EXPECT_EQ(c.size(), 1u);
  EXPECT_TRUE(r.proportional);
}

TEST(Toric, OffCentreVertexIsNotMonotone) {
  nlohmann::json j = nlohmann::json::parse(R"({
    "version": 1,
    "curve": {"vertices": [["1/2", "1/2"]], "rays": [[0, -1, -1], [0, 2, -1], [0, -1, 2]]},
    "polygon": {"vertices": [[0, 0], [3, 0], [0, 3]]}
  })");
  auto f = tools::parse_fixture(j, false);
  MonotoneReport r = monotone_report(*f.curve, *f.polygon, default_disk_classes(*f.polygon));
  EXPECT_FALSE(r.proportional);
  EXPECT_FALSE(r.factor.has_value());
}

TEST(Toric, MonotoneNeedsOneVertex) {
  auto f = load("p2_torus");
  EXPECT_THROW(monotone_report(*f.curve, *f.polygon, default_disk_classes(*f.polygon)), InputError);
}
