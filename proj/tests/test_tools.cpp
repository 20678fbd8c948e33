#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "lagpants/errors.hpp"
#include "lagpants/tools/commands.hpp"
#include "lagpants/tools/io.hpp"
#include "lagpants/tools/svg.hpp"
#include "lagpants/tools/verify.hpp"

using namespace lagpants;
using namespace lagpants::tools;
using nlohmann::json;

TEST(Tools, FixtureWithPolytope) {
  Fixture f = read_fixture(std::string(LAGPANTS_FIXTURE_DIR) + "/triangle_curve.json");
  ASSERT_TRUE(f.polytope && f.lifting);
  EXPECT_FALSE(f.curve.has_value());
  PlaneCurve c = fixture_curve(f);
  EXPECT_EQ(c.vertices.size(), 3u);
}

TEST(Tools, MissingLiftingValue) {
  json j = json::parse(R"({"version": 1, "polytope": {"vertices": [[0,0],[1,2],[2,1]], "lifting": {"0,0": 1}}})");
  EXPECT_THROW(parse_fixture(j, false), InputError);
  Fixture f = parse_fixture(j, true);
  EXPECT_EQ(f.lifting->values.size(), f.polytope->lattice_points.size());
}

TEST(Tools, MalformedInputs) {
  EXPECT_THROW(parse_fixture(json::parse(R"({"version": 2, "curve": {}})")), InputError);
  EXPECT_THROW(parse_fixture(json::parse(R"([1, 2])")), InputError);
  EXPECT_THROW(parse_fixture(json::parse(R"({"version": 1})")), InputError);
  EXPECT_THROW(parse_fixture(json::parse(R"({"curve": {"vertices": [[0,0]], "rays": [[0,1,0],[0,0,1]]}})")),
               InputError);
  EXPECT_THROW(parse_fixture(json::parse(R"({"curve": {"vertices": [[0,"x"]], "rays": []}})")), InputError);
  auto path = std::filesystem::temp_directory_path() / "lagpants_bad.json";
  std::ofstream(path) << "{ not json";
  EXPECT_THROW(read_fixture(path), InputError);
  EXPECT_THROW(read_fixture("/nonexistent/lagpants.json"), InputError);
}

TEST(Tools, CurveJsonRoundTrip) {
  PlaneCurve c = fixture_curve(read_fixture(std::string(LAGPANTS_FIXTURE_DIR) + "/triangle_curve.json"));
  json j;
  j["version"] = 1;
  j["curve"] = curve_to_json(c);
  PlaneCurve d = *parse_fixture(j).curve;
  EXPECT_EQ(d.vertices, c.vertices);
  EXPECT_EQ(d.edges.size(), c.edges.size());
  EXPECT_EQ(rational_json(Rational(3, 2)), json("3/2"));
  EXPECT_EQ(rational_json(Rational(-4)), json(-4));
}

TEST(Tools, TwistSpec) {
  RunConfig cfg;
  add_twist(cfg, "edge=2,winding=-3");
  EXPECT_EQ(cfg.twist.winding.at(2), -3);
  EXPECT_THROW(add_twist(cfg, "edge=2"), InputError);
  EXPECT_THROW(add_twist(cfg, "winding=1,edge=x"), InputError);
}

TEST(Tools, ConfigValidation) {
  RunConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.scale = 0.0;
  EXPECT_THROW(cfg.validate(), ConfigError);
  cfg.scale = 1.0;
  cfg.n = 3;
  EXPECT_THROW(cfg.validate(), ConfigError);
}

TEST(Tools, ExitCodes) {
  RunConfig cfg;
  cfg.inputs = {"/nonexistent/lagpants.json"};
  std::ostringstream out, err;
  EXPECT_EQ(run_guarded(cmd_tropical, cfg, out, err), kInputError);
  EXPECT_FALSE(err.str().empty());
}

TEST(Tools, SvgEmbedsCommandLine) {
  SvgDocument doc(100, 80, "lagpants tropical a&b.json");
  std::string s = doc.str();
  EXPECT_NE(s.find("<svg"), std::string::npos);
  EXPECT_NE(s.find("a&amp;b.json"), std::string::npos);
}

TEST(Tools, VerifyIsDeterministic) {
  VerifyOptions opt;
  opt.fixtures = LAGPANTS_FIXTURE_DIR;
  for (const char* suite : {"boundary", "equivariance", "topology"}) {
    auto a = format_report(run_suite(suite, opt));
    auto b = format_report(run_suite(suite, opt));
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.rfind("PASS", 0), 0u) << a;
  }
  EXPECT_THROW(run_suite("nope", opt), InputError);
}
