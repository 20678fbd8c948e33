#include "lagpants/tools/commands.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <fstream>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lagpants/errors.hpp"
#include "lagpants/pants.hpp"
#include "lagpants/toric.hpp"
#include "lagpants/tools/io.hpp"
#include "lagpants/tools/svg.hpp"
#include "lagpants/tools/verify.hpp"

namespace lagpants::tools {

using nlohmann::json;
using V2 = Eigen::Vector2d;

namespace {

V2 to_v2(const QPoint& p) { return {to_double(p[0]), to_double(p[1])}; }

std::string fixture_stem(const std::filesystem::path& p) {
  std::string s = p.stem().string();
  return s.empty() ? "out" : s;
}

std::string num(double v, const char* f = "%.10g") {
  char buf[40];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Polylines of f over [a, b], broken where the point leaves the viewport box.
std::vector<std::vector<V2>> clipped_curve(const std::function<V2(double)>& f, double a, double b, int samples,
                                           const Viewport& vp) {
  std::vector<std::vector<V2>> out(1);
  for (int i = 0; i <= samples; ++i) {
    V2 p = f(a + (b - a) * i / samples);
    bool in = p.allFinite() && p.x() >= vp.xmin && p.x() <= vp.xmax && p.y() >= vp.ymin && p.y() <= vp.ymax;
    if (in)
      out.back().push_back(p);
    else if (!out.back().empty())
      out.emplace_back();
  }
  std::erase_if(out, [](const auto& l) { return l.size() < 2; });
  return out;
}

// ------------------------------------------------------------------ tropical

void draw_curve(SvgDocument& svg, Viewport vp, const PlaneCurve& c, double ray_length) {
  std::vector<V2> pts;
  for (const auto& v : c.vertices) pts.push_back(to_v2(v));
  for (const auto& e : c.edges)
    if (e.is_line()) pts.push_back(to_v2(e.base));
  if (pts.empty()) pts.push_back(V2::Zero());
  std::vector<V2> frame = pts;
  for (const auto& p : pts) {
    frame.push_back(p + V2(ray_length, ray_length));
    frame.push_back(p - V2(ray_length, ray_length));
  }
  vp.fit(frame);
  svg.frame(vp, "tropical curve");
  for (const auto& e : c.edges) {
    V2 d(static_cast<double>(e.direction[0]), static_cast<double>(e.direction[1]));
    V2 a, b;
    if (e.is_bounded()) {
      a = to_v2(c.vertices[static_cast<std::size_t>(e.tail)]);
      b = to_v2(c.vertices[static_cast<std::size_t>(e.head)]);
    } else if (e.is_ray()) {
      a = to_v2(c.vertices[static_cast<std::size_t>(e.tail)]);
      b = a + ray_length * d.normalized();
    } else {
      a = to_v2(e.base) - ray_length * d.normalized();
      b = to_v2(e.base) + ray_length * d.normalized();
    }
    svg.polyline(vp, {a, b}, e.weight > 1 ? "#c0392b" : "#1f4e79", 1.5 + 0.8 * static_cast<double>(e.weight - 1));
    if (e.weight > 1) svg.text(vp, (a + b) / 2, std::to_string(e.weight), 12);
  }
  for (const auto& v : c.vertices) svg.circle(vp, to_v2(v), 3, "#1f4e79");
}

void draw_subdivision(SvgDocument& svg, Viewport vp, const Subdivision& s) {
  std::vector<V2> pts;
  for (const auto& p : s.polytope.lattice_points)
    pts.emplace_back(static_cast<double>(p[0]), static_cast<double>(p[1]));
  vp.fit(pts, 0.2);
  svg.frame(vp, "dual subdivision");
  for (const auto& cell : s.cells) {
    if (cell.dim != 1) continue;
    std::vector<V2> seg;
    for (auto i : cell.vertices) seg.push_back(pts[i]);
    svg.polyline(vp, seg, "#333333", 1.5);
  }
  for (const auto& p : pts) svg.circle(vp, p, 3, "#333333");
}

// ------------------------------------------------------------------ pants

std::string pants_csv(int n, double lambda, int res, double& worst) {
  PantsMap pm(n, lambda);
  std::ostringstream os;
  os << "y1";
  for (int j = 2; j <= n + 1; ++j) os << ",y" << j;
  os << ",F";
  for (int j = 1; j <= n + 1; ++j) os << ",h" << j;
  for (int j = 1; j <= n + 1; ++j) os << ",eig" << j;
  os << '\n';
  worst = -1e300;
  // Interior grid of the plus simplex with spacing (pi/2) / res.
  std::vector<int> idx(static_cast<std::size_t>(n + 1), 1);
  for (;;) {
    int sum = 0;
    for (int i : idx) sum += i;
    if (sum < res) {
      Vec y(n + 1);
      for (int j = 0; j <= n; ++j) y(j) = kHalfPi * idx[static_cast<std::size_t>(j)] / res;
      Vec h = pm.h(y);
      Eigen::SelfAdjointEigenSolver<Mat> es(pm.hessian(y), Eigen::EigenvaluesOnly);
      worst = std::max(worst, es.eigenvalues().maxCoeff());
      for (int j = 0; j <= n; ++j) os << (j ? "," : "") << num(y(j));
      os << ',' << num(pm.F(y));
      for (int j = 0; j <= n; ++j) os << ',' << num(h(j));
      for (int j = 0; j <= n; ++j) os << ',' << num(es.eigenvalues()(j));
      os << '\n';
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] >= res) idx[k++] = 1;
    if (k == idx.size()) break;
  }
  os << "# max eigenvalue " << num(worst, "%.6e") << ", all negative: " << (worst < 0 ? "true" : "false") << '\n';
  return os.str();
}

std::string region_svg_n1(const RunConfig& cfg) {
  SvgDocument svg(520, 520, cfg.command_line);
  Viewport vp;
  vp.xmin = vp.ymin = -3 * cfg.lambda;
  vp.xmax = vp.ymax = 3 * cfg.lambda;
  vp.left = vp.top = 10;
  vp.width = vp.height = 500;
  svg.frame(vp, "boundary of H, n = 1");
  svg.polyline(vp, {V2(vp.xmin, 0), V2(vp.xmax, 0)}, "#cccccc", 1);
  svg.polyline(vp, {V2(0, vp.ymin), V2(0, vp.ymax)}, "#cccccc", 1);
  const char* colors[] = {"#1f4e79", "#c0392b", "#27ae60"};
  // S_0 = {4 x1 x2 = lambda^2, x > 0}, parametrised by log x1.
  auto s0 = [&](double u) {
    double x1 = cfg.lambda * std::exp(u);
    return V2(x1, cfg.lambda * cfg.lambda / (4 * x1));
  };
  for (int k = 0; k <= 2; ++k) {
    TorusAffineMap R = k == 0 ? TorusAffineMap{identity_matrix(2), {0, 0}, identity_matrix(2)} : symmetry(1, k);
    auto f = [&](double u) {
      Vec x(2);
      x << s0(u).x(), s0(u).y();
      Vec y = R.apply_base(x);
      return V2(y(0), y(1));
    };
    for (const auto& line : clipped_curve(f, -8, 8, 800, vp)) svg.polyline(vp, line, colors[k], 2);
    svg.text(vp, f(k == 0 ? 0.0 : 1.0), "S_" + std::to_string(k), 13);
  }
  return svg.str();
}

double parse_section(const std::string& s) {
  std::string v = s.rfind("t=", 0) == 0 ? s.substr(2) : s;
  try {
    std::size_t used = 0;
    double t = std::stod(v, &used);
    if (used != v.size()) throw std::invalid_argument(v);
    return t;
  } catch (const std::exception&) {
    throw InputError("section must look like t=0.2");
  }
}

std::string section_svg_n2(const RunConfig& cfg, double t, std::string& data) {
  namespace d = decomposition;
  // Plane x1 - (x2 + x3) / 3 = t, drawn in the coordinates (x2, x3).
  auto lift_pt = [t](double x2, double x3) {
    Vec x(3);
    x << t + (x2 + x3) / 3.0, x2, x3;
    return x;
  };
  SvgDocument svg(520, 520, cfg.command_line);
  Viewport vp;
  vp.xmin = vp.ymin = -0.05;
  vp.xmax = vp.ymax = 1.0;
  vp.left = vp.top = 10;
  vp.width = vp.height = 500;
  svg.frame(vp, "H cut by x1 - (x2 + x3)/3 = " + num(t, "%.3g"));
  const int g = 60;
  for (int i = 0; i <= g; ++i)
    for (int j = 0; j <= g; ++j) {
      double x2 = vp.xmin + (vp.xmax - vp.xmin) * i / g, x3 = vp.ymin + (vp.ymax - vp.ymin) * j / g;
      if (!region_membership(lift_pt(x2, x3)).outside()) svg.circle(vp, V2(x2, x3), 1.6, "#b0c4de");
    }
  // S_0 in the plane: 27 x1 x2 x3 = 1 is increasing in x3 for fixed x2 > 0.
  std::vector<V2> curve;
  std::ostringstream os;
  os << "kind,x1,x2,x3\n";
  for (int i = 1; i <= 400; ++i) {
    double x2 = vp.xmax * i / 400.0;
    auto f = [&](double x3) { return 27.0 * lift_pt(x2, x3).prod() - 1.0; };
    double lo = 0.0, hi = 1.0;
    while (f(hi) < 0 && hi < 1e6) hi *= 2;
    for (int it = 0; it < 200; ++it) {
      double mid = (lo + hi) / 2;
      (f(mid) < 0 ? lo : hi) = mid;
    }
    if (hi <= vp.ymax) {
      curve.emplace_back(x2, hi);
      Vec x = lift_pt(x2, hi);
      os << "S0," << num(x(0)) << ',' << num(x(1)) << ',' << num(x(2)) << '\n';
    }
  }
  if (curve.size() > 1) svg.polyline(vp, curve, "#1f4e79", 2);
  if (t >= 1.0 / 9.0) {
    std::vector<V2> tri;
    for (int k : {0, 2, 3}) {
      Vec q = d::q_t(k, t);
      tri.emplace_back(q(1), q(2));
      os << "K1," << num(q(0)) << ',' << num(q(1)) << ',' << num(q(2)) << '\n';
    }
    svg.polyline(vp, tri, "#c0392b", 2, true);
  }
  data = os.str();
  return svg.str();
}

// ------------------------------------------------------------------ lift

std::string pl_samples_off(const PLLift& pl, double truncation, int res) {
  std::vector<Eigen::Vector3d> pts;
  double step = kPi / res;
  for (const auto& vp : pl.vertex_pieces)
    for (int i = 0; i < res; ++i)
      for (int j = 0; j < res; ++j) {
        V2 y(i * step, j * step);
        if (vp.distance(y) < 1e-12) pts.emplace_back(vp.center.x(), vp.center.y(), y.x());
      }
  for (const auto& ep : pl.edge_pieces) {
    double hi = std::isfinite(ep.s_max) ? ep.s_max : truncation;
    int ns = std::max(2, static_cast<int>(std::ceil((hi - ep.s_min) / step)));
    for (int a = 0; a <= ns; ++a) {
      double s = ep.s_min + (hi - ep.s_min) * a / ns;
      V2 x = ep.base + s * ep.direction;
      for (long long sheet = 0; sheet < ep.fiber.weight; ++sheet)
        for (int b = 0; b < res; ++b) {
          V2 y = ep.fiber.point(b * step, sheet, ep.shift_at(s));
          pts.emplace_back(x.x(), x.y(), y.x());
        }
    }
  }
  std::ostringstream os;
  os << "OFF\n" << pts.size() << " 0 0\n";
  for (const auto& p : pts) os << num(p.x()) << ' ' << num(p.y()) << ' ' << num(p.z()) << '\n';
  return os.str();
}

json topology_json(const PLLift& pl) {
  return {{"euler", pl.euler},
          {"punctures", pl.punctures},
          {"components", pl.components},
          {"genus", pl.genus}};
}

// ------------------------------------------------------------------ toric

const char* hit_name(HitKind k) {
  switch (k) {
    case HitKind::circle_boundary: return "circle_boundary";
    case HitKind::smooth_point: return "smooth_point";
    case HitKind::moebius: return "moebius";
    case HitKind::unsupported: return "unsupported";
  }
  return "unsupported";
}

std::string topology_summary(const LiftTopology& t) {
  std::string s;
  if (!t.orientable)
    s = "non-orientable";
  else if (t.components == 1 && t.genus == 1 && t.punctures == 0 && t.boundary_circles == 0)
    s = "torus";
  else if (t.components == 1 && t.genus == 0 && t.punctures == 0 && t.boundary_circles == 0)
    s = "sphere";
  else
    s = "orientable, genus " + std::to_string(t.genus);
  return s + ", chi=" + std::to_string(t.euler);
}

Fixture input_fixture(const RunConfig& cfg, std::size_t i = 0) {
  if (cfg.inputs.size() <= i) throw InputError("missing input file");
  return read_fixture(cfg.inputs[i], cfg.default_zero);
}

}  // namespace

void RunConfig::validate() const {
  if (resolution < 8) throw ConfigError("resolution must be at least 8");
  if (!(scale > 0 && scale <= 1)) throw ConfigError("scale t must lie in (0, 1]");
  if (n < 1 || n > 2) throw ConfigError("n must be 1 or 2");
  if (!(lambda > 0)) throw ConfigError("lambda must be positive");
  if (truncation && !(*truncation > 0)) throw ConfigError("truncation must be positive");
}

void add_twist(RunConfig& cfg, const std::string& spec) {
  long long edge = -1, winding = 0;
  bool have_w = false;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw InputError("twist must look like edge=E,winding=N");
    std::string key = part.substr(0, eq), val = part.substr(eq + 1);
    try {
      if (key == "edge")
        edge = std::stoll(val);
      else if (key == "winding") {
        winding = std::stoll(val);
        have_w = true;
      } else
        throw InputError("unknown twist key '" + key + "'");
    } catch (const std::logic_error&) {
      throw InputError("twist value '" + val + "' is not an integer");
    }
  }
  if (edge < 0 || !have_w) throw InputError("twist must look like edge=E,winding=N");
  cfg.twist.winding[static_cast<std::size_t>(edge)] += winding;
}

int cmd_tropical(const RunConfig& cfg, std::ostream& out) {
  Fixture f = input_fixture(cfg);
  PlaneCurve c = fixture_curve(f);
  bool smooth = is_smooth(c);
  if (cfg.check_smooth) {
    out << (smooth ? "true" : "false") << '\n';
    return kOk;
  }
  std::string stem = fixture_stem(cfg.inputs[0]);
  json j;
  j["version"] = kFixtureVersion;
  j["name"] = f.name;
  j["curve"] = curve_to_json(c);
  j["balanced"] = balancing_check(c);
  j["smooth"] = smooth;
  write_text(cfg.out / (stem + ".curve.json"), j.dump(2) + "\n");

  double diam = 1.0;
  for (const auto& a : c.vertices)
    for (const auto& b : c.vertices) diam = std::max(diam, (to_v2(a) - to_v2(b)).norm());
  SvgDocument svg(820, 420, cfg.command_line);
  Viewport left;
  left.left = left.top = 10;
  left.width = left.height = 400;
  draw_curve(svg, left, c, diam);
  if (c.subdivision) {
    Viewport right = left;
    right.left = 410;
    draw_subdivision(svg, right, *c.subdivision);
  }
  write_text(cfg.out / (stem + ".svg"), svg.str());

  out << f.name << ": " << c.vertices.size() << " vertices, " << c.bounded_count() << " bounded edges, "
      << c.edges.size() - c.bounded_count() << " unbounded\n";
  return kOk;
}

int cmd_pants(const RunConfig& cfg, std::ostream& out) {
  std::string base = "pants_n" + std::to_string(cfg.n);
  double worst = 0;
  write_text(cfg.out / (base + ".csv"), pants_csv(cfg.n, cfg.lambda, cfg.resolution, worst));
  if (cfg.n == 1) {
    write_text(cfg.out / (base + ".svg"), region_svg_n1(cfg));
  } else {
    double t = cfg.section.empty() ? 0.2 : parse_section(cfg.section);
    std::string data;
    std::string svg = section_svg_n2(cfg, t, data);
    std::string tag = base + "_section_" + num(t, "%g");
    write_text(cfg.out / (tag + ".svg"), svg);
    write_text(cfg.out / (tag + ".csv"), data);
  }
  out << "max Hessian eigenvalue " << num(worst, "%.6e") << ", all negative: " << (worst < 0 ? "true" : "false")
      << '\n';
  return worst < 0 ? kOk : kVerificationFailure;
}

int cmd_lift(const RunConfig& cfg, std::ostream& out) {
  Fixture f = input_fixture(cfg);
  PlaneCurve c = fixture_curve(f);
  std::string stem = fixture_stem(cfg.inputs[0]);
  GluingSchedule sched = default_schedule(c);
  if (cfg.truncation) sched.truncation = *cfg.truncation;
  PLLift pl = pl_lift(c);
  long long n_sigma = cfg.twist.winding.empty() ? 0 : twist(pl, cfg.twist, sched);

  json rep;
  rep["name"] = f.name;
  rep["scale"] = cfg.scale;
  rep["resolution"] = cfg.resolution;
  rep["topology"] = topology_json(pl);
  rep["n_sigma"] = n_sigma;
  ExactnessReport ex = exactness_check(c);
  rep["exact"] = ex.exact;
  rep["exactness_constants"] = json::array();
  for (const auto& k : ex.constants) rep["exactness_constants"].push_back(rational_json(k));

  if (cfg.pl_only) {
    write_text(cfg.out / (stem + ".pl.off"), pl_samples_off(pl, sched.truncation, cfg.resolution));
    rep["pl_only"] = true;
    write_text(cfg.out / (stem + ".report.json"), rep.dump(2) + "\n");
    out << rep.dump(2) << '\n';
    return kOk;
  }

  validate(sched, c, cfg.scale);
  LagrangianMesh m = smooth_lift(c, cfg.scale, sched, cfg.resolution, cfg.twist.winding.empty() ? nullptr : &cfg.twist);
  double residual = symplectic_residual(m);
  double H = hausdorff_distance(m, pl, cfg.resolution);
  {
    std::ostringstream off, obj;
    m.write_off(off, ProjectionMode::x1_x2_y1);
    m.write_obj(obj, ProjectionMode::x1_x2_y2);
    write_text(cfg.out / (stem + ".off"), off.str());
    write_text(cfg.out / (stem + ".obj"), obj.str());
  }
  rep["points"] = m.points.size();
  rep["quads"] = m.quads.size();
  rep["pieces"] = {{"pants", m.count(PieceKind::pants)},
                   {"collar", m.count(PieceKind::collar)},
                   {"cylinder", m.count(PieceKind::cylinder)}};
  rep["symplectic_residual"] = residual;
  rep["hausdorff_to_pl"] = H;
  rep["lambda"] = json::array();
  for (const auto& v : sched.vertices) rep["lambda"].push_back(v.lambda * cfg.scale);
  bool ok = residual < 1e-6;
  rep["passed"] = ok;
  write_text(cfg.out / (stem + ".report.json"), rep.dump(2) + "\n");
  out << rep.dump(2) << '\n';
  return ok ? kOk : kVerificationFailure;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.fixtures = cfg.fixtures;
  opt.resolution = cfg.resolution;
  auto results = run_suite(cfg.suite, opt);
  std::string report = format_report(results);
  out << report;
  if (cfg.out != ".") write_text(cfg.out / ("verify_" + cfg.suite + ".txt"), report);
  for (const auto& r : results)
    if (!r.passed) return kVerificationFailure;
  return kOk;
}

int cmd_toric(const RunConfig& cfg, std::ostream& out) {
  Fixture f = input_fixture(cfg);
  if (cfg.inputs.size() > 1) {
    Fixture g = input_fixture(cfg, 1);
    if (!g.polygon) throw InputError(cfg.inputs[1].string() + " has no 'polygon'");
    f.polygon = g.polygon;
  }
  if (!f.polygon) throw InputError("toric needs a moment polygon");
  PlaneCurve c = fixture_curve(f);
  const DelzantPolygon& poly = *f.polygon;

  json rep;
  rep["name"] = f.name;
  rep["polygon"] = polygon_to_json(poly);
  rep["delzant"] = delzant_check(poly);
  rep["classification"] = json::array();
  for (const auto& h : classify_boundary(c, poly))
    rep["classification"].push_back({{"point", {rational_json(h.point[0]), rational_json(h.point[1])}},
                                     {"curve_edge", h.curve_edge},
                                     {"weight", h.weight},
                                     {"boundary_edge", h.boundary_edge},
                                     {"polygon_vertex", h.polygon_vertex},
                                     {"index", h.index},
                                     {"kind", hit_name(h.kind)}});
  LiftTopology t = lift_topology(c, poly);
  std::string summary = topology_summary(t);
  rep["topology"] = {{"summary", summary},
                     {"euler", t.euler},
                     {"orientable", t.orientable},
                     {"boundary_circles", t.boundary_circles},
                     {"punctures", t.punctures},
                     {"components", t.components},
                     {"genus", t.genus},
                     {"crosscaps", t.crosscaps},
                     {"disk_caps", t.disk_caps},
                     {"moebius_caps", t.moebius_caps},
                     {"audin_ok", t.audin_ok}};
  std::string mono_line;
  if (c.vertices.size() == 1) {
    MonotoneReport m = monotone_report(c, poly, default_disk_classes(poly));
    json table = json::array();
    for (const auto& e : m.entries) table.push_back({{"class", e.label}, {"mu", e.mu}, {"omega", rational_json(e.omega)}});
    rep["monotone"] = {{"table", table},
                       {"proportional", m.proportional},
                       {"factor", m.factor ? rational_json(*m.factor) : json(nullptr)}};
    mono_line = m.proportional && m.factor ? "monotone, factor " + to_string(*m.factor) : "not monotone";
  } else {
    rep["monotone"] = nullptr;
  }
  write_text(cfg.out / (fixture_stem(cfg.inputs[0]) + ".toric.json"), rep.dump(2) + "\n");
  out << summary << '\n';
  if (!mono_line.empty()) out << mono_line << '\n';
  return kOk;
}

int run_guarded(int (*cmd)(const RunConfig&, std::ostream&), const RunConfig& cfg, std::ostream& out,
                std::ostream& err) {
  try {
    cfg.validate();
    return cmd(cfg, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "numeric failure: " << e.what() << '\n';
    return kNumericFailure;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace lagpants::tools
