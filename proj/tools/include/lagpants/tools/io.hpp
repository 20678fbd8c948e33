#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "lagpants/polyhedral.hpp"
#include "lagpants/toric.hpp"
#include "lagpants/tropical.hpp"

namespace lagpants::tools {

inline constexpr int kFixtureVersion = 1;

// One input file. A fixture carries either a lattice polytope with lifting
// values or an explicit curve, and optionally a moment polygon.
struct Fixture {
  std::string name;
  std::optional<LatticePolytope> polytope;
  std::optional<LiftingFunction> lifting;
  std::optional<PlaneCurve> curve;
  std::optional<DelzantPolygon> polygon;
};

// Missing lifting values are an error unless default_zero is set.
Fixture parse_fixture(const nlohmann::json& j, bool default_zero = false);
Fixture read_fixture(const std::filesystem::path& path, bool default_zero = false);

// The explicit curve, or the tropical curve of the polytope and lifting.
PlaneCurve fixture_curve(const Fixture& f);

nlohmann::json curve_to_json(const PlaneCurve& c);
nlohmann::json polygon_to_json(const DelzantPolygon& p);
nlohmann::json rational_json(const Rational& r);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace lagpants::tools
