#include "lagpants/tools/io.hpp"

#include <fstream>
#include <sstream>

#include "lagpants/errors.hpp"

namespace lagpants::tools {

using nlohmann::json;

namespace {

Rational number(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_float()) {
    std::ostringstream os;
    os.precision(17);
    os << v.get<double>();
    return parse_rational(os.str());
  }
  throw InputError("expected a number or a rational string");
}

long long integer(const json& v) {
  if (!v.is_number_integer()) throw InputError("expected an integer");
  return v.get<long long>();
}

QPoint qpoint(const json& v) {
  if (!v.is_array() || v.size() != 2) throw InputError("expected a point [a, b]");
  return {number(v[0]), number(v[1])};
}

IPoint ipoint(const json& v) {
  if (!v.is_array()) throw InputError("expected an integer vector");
  IPoint p;
  for (const auto& c : v) p.push_back(integer(c));
  return p;
}

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field '") + key + "'");
  return *it;
}

std::string key_of(const IPoint& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

PlaneCurve parse_curve(const json& j) {
  std::vector<QPoint> vertices;
  for (const auto& v : j.value("vertices", json::array())) vertices.push_back(qpoint(v));

  std::vector<SegmentInput> segments;
  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2) throw InputError("edge must be [tail, head]");
    long long a = integer(e[0]), b = integer(e[1]);
    if (a < 0 || b < 0) throw InputError("edge refers to a negative vertex index");
    segments.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), 1});
  }
  std::vector<RayInput> rays;
  for (const auto& r : j.value("rays", json::array())) {
    if (!r.is_array() || r.size() != 3) throw InputError("ray must be [vertex, dx, dy]");
    long long v = integer(r[0]);
    if (v < 0) throw InputError("ray refers to a negative vertex index");
    rays.push_back({static_cast<std::size_t>(v), {integer(r[1]), integer(r[2])}, 1});
  }
  if (j.contains("weights")) {
    const json& w = j["weights"];
    if (!w.is_array() || w.size() != segments.size() + rays.size())
      throw InputError("weights must list every edge, then every ray");
    for (std::size_t i = 0; i < segments.size(); ++i) segments[i].weight = integer(w[i]);
    for (std::size_t i = 0; i < rays.size(); ++i) rays[i].weight = integer(w[segments.size() + i]);
  }
  std::vector<LineInput> lines;
  for (const auto& l : j.value("lines", json::array()))
    lines.push_back({qpoint(field(l, "point")), ipoint(field(l, "direction")), l.contains("weight") ? integer(l["weight"]) : 1});
  PlaneCurve c = make_curve(vertices, segments, rays, lines);
  if (!balancing_check(c)) throw InputError("curve is not balanced");
  return c;
}

DelzantPolygon parse_polygon(const json& j) {
  std::vector<QPoint> vertices;
  for (const auto& v : field(j, "vertices")) vertices.push_back(qpoint(v));
  if (j.contains("incoming") || j.contains("outgoing"))
    return DelzantPolygon::from_chain(ipoint(field(j, "incoming")), vertices, ipoint(field(j, "outgoing")));
  return DelzantPolygon::from_vertices(vertices);
}

}  // namespace

Fixture parse_fixture(const json& j, bool default_zero) {
  try {
    if (!j.is_object()) throw InputError("fixture must be a JSON object");
    int version = j.value("version", kFixtureVersion);
    if (version != kFixtureVersion) throw InputError("unsupported fixture version " + std::to_string(version));
    Fixture f;
    f.name = j.value("name", std::string("unnamed"));
    if (j.contains("polytope")) {
      const json& p = j["polytope"];
      std::vector<IPoint> pts;
      for (const auto& v : field(p, "vertices")) pts.push_back(ipoint(v));
      f.polytope = LatticePolytope::from_points(pts);
      LiftingFunction nu;
      const json lift = p.value("lifting", json::object());
      for (const auto& lp : f.polytope->lattice_points) {
        auto it = lift.find(key_of(lp));
        if (it != lift.end())
          nu.values[lp] = integer(*it);
        else if (default_zero)
          nu.values[lp] = 0;
        else
          throw InputError("no lifting value at lattice point " + key_of(lp) + " (pass --default-zero to use 0)");
      }
      f.lifting = nu;
    }
    if (j.contains("curve")) f.curve = parse_curve(j["curve"]);
    if (j.contains("polygon")) f.polygon = parse_polygon(j["polygon"]);
    if (!f.polytope && !f.curve) throw InputError("fixture has neither 'polytope' nor 'curve'");
    return f;
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed fixture: ") + e.what());
  }
}

Fixture read_fixture(const std::filesystem::path& path, bool default_zero) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return parse_fixture(j, default_zero);
}

PlaneCurve fixture_curve(const Fixture& f) {
  if (f.curve) return *f.curve;
  return plane_curve(tropical_hypersurface(regular_subdivision(*f.polytope, *f.lifting)));
}

json rational_json(const Rational& r) {
  if (denominator(r) == 1) return static_cast<long long>(numerator(r));
  return to_string(r);
}

json curve_to_json(const PlaneCurve& c) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : c.vertices) j["vertices"].push_back({rational_json(v[0]), rational_json(v[1])});
  j["edges"] = json::array();
  j["rays"] = json::array();
  j["lines"] = json::array();
  json weights = json::array(), ray_weights = json::array();
  for (const auto& e : c.edges) {
    if (e.is_bounded()) {
      j["edges"].push_back({e.tail, e.head});
      weights.push_back(e.weight);
    } else if (e.is_ray()) {
      j["rays"].push_back({e.tail, e.direction[0], e.direction[1]});
      ray_weights.push_back(e.weight);
    } else {
      j["lines"].push_back({{"point", {rational_json(e.base[0]), rational_json(e.base[1])}},
                            {"direction", {e.direction[0], e.direction[1]}},
                            {"weight", e.weight}});
    }
  }
  for (auto& w : ray_weights) weights.push_back(w);
  j["weights"] = weights;
  return j;
}

json polygon_to_json(const DelzantPolygon& p) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : p.vertices) j["vertices"].push_back({rational_json(v[0]), rational_json(v[1])});
  if (!p.closed) {
    const auto& in = p.edges.front().tangent;
    j["incoming"] = {-in[0], -in[1]};
    j["outgoing"] = p.edges.back().tangent;
  }
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

}  // namespace lagpants::tools
