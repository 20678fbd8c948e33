#include "lagpants/tools/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>

#include <boost/random/sobol.hpp>

#include "lagpants/errors.hpp"
#include "lagpants/lift.hpp"
#include "lagpants/maslov.hpp"
#include "lagpants/pants.hpp"
#include "lagpants/toric.hpp"
#include "lagpants/tools/io.hpp"

namespace lagpants::tools {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string sci(double v) { return fmt("%.3e", v); }

// Point of the open plus simplex {y_j > 0, sum y < pi/2} from n + 1 uniforms,
// via the spacings of the sorted sample.
Vec simplex_point(std::vector<double> u) {
  std::sort(u.begin(), u.end());
  Vec y(static_cast<Eigen::Index>(u.size()));
  double prev = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    y(static_cast<Eigen::Index>(i)) = kHalfPi * (u[i] - prev);
    prev = u[i];
  }
  return y;
}

double min_extended(const Vec& y) { return std::min(y.minCoeff(), kHalfPi - y.sum()); }

Vec random_interior(int n, std::mt19937_64& rng, double margin) {
  std::uniform_real_distribution<double> U(0.0, 1.0);
  for (;;) {
    std::vector<double> u(static_cast<std::size_t>(n + 1));
    for (auto& v : u) v = U(rng);
    Vec y = simplex_point(u);
    if (min_extended(y) > margin) return y;
  }
}

double slack_H0(const Vec& x) {
  return std::min(x.minCoeff(), -boundary_residual(x, 0));
}

CriterionResult hessian(const VerifyOptions& opt) {
  CriterionResult r{1, "hessian"};
  auto t0 = std::chrono::steady_clock::now();
  double worst = -1e300;
  std::size_t count = 0;
  std::mt19937_64 rng(opt.seed);
  for (int n : {1, 2}) {
    PantsMap pm(n);
    boost::random::sobol qrng(static_cast<unsigned>(n + 1));
    // Cranley-Patterson rotation keeps the sequence low-discrepancy and makes it depend on the seed.
    std::vector<double> shift(static_cast<std::size_t>(n + 1));
    std::uniform_real_distribution<double> U(0.0, 1.0);
    for (auto& s : shift) s = U(rng);
    int accepted = 0;
    while (accepted < 10000) {
      std::vector<double> u(static_cast<std::size_t>(n + 1));
      for (std::size_t i = 0; i < u.size(); ++i) u[i] = std::fmod(std::ldexp(static_cast<double>(qrng()), -64) + shift[i], 1.0);
      Vec y = simplex_point(u);
      if (min_extended(y) < 1e-9) continue;
      Eigen::SelfAdjointEigenSolver<Mat> es(pm.hessian(y), Eigen::EigenvaluesOnly);
      worst = std::max(worst, es.eigenvalues().maxCoeff());
      ++accepted;
      ++count;
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.passed = worst < 0 && r.seconds < 10.0;
  r.detail = "max eigenvalue " + sci(worst) + " over " + std::to_string(count) + " points, n = 1, 2";
  if (r.seconds >= 10.0) r.detail += "; runtime over 10 s";
  return r;
}

CriterionResult boundary(const VerifyOptions& opt) {
  CriterionResult r{2, "boundary"};
  std::mt19937_64 rng(opt.seed + 1);
  std::uniform_real_distribution<double> L(-3.0, 3.0);
  double worst = 0.0;
  for (int n : {1, 2}) {
    PantsMap pm(n);
    std::uniform_int_distribution<int> axis(0, n);
    for (int i = 0; i < 1000; ++i) {
      ChartPoint c;
      c.vertex = 0;
      c.axis = axis(rng);
      c.alpha.resize(n);
      for (int j = 0; j < n; ++j) c.alpha(j) = std::exp(L(rng));
      c.t = 0.0;
      Vec x = pm.h(c);
      worst = std::max(worst, std::abs(std::pow(n + 1.0, n + 1) * x.prod() - 1.0));
    }
  }
  r.passed = worst <= 1e-9;
  r.detail = "max |(n+1)^(n+1) prod x - 1| = " + sci(worst) + " at 2000 chart points";
  return r;
}

CriterionResult region(const VerifyOptions& opt) {
  CriterionResult r{3, "region"};
  std::mt19937_64 rng(opt.seed + 2);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  double worst = 1e300;
  std::size_t total = 0;
  for (int n : {1, 2}) {
    PantsMap pm(n);
    std::vector<int> J0;
    for (int j = 1; j <= n + 1; ++j) J0.push_back(j);
    int accepted = 0;
    while (accepted < 10000) {
      std::vector<double> u(static_cast<std::size_t>(n + 1));
      for (auto& v : u) v = U(rng);
      Vec y = simplex_point(u);
      if (min_extended(y) < 1e-12 || !in_W(n, y, J0)) continue;
      if (accepted % 2) y = -y;
      worst = std::min(worst, slack_H0(pm.h_auto(y)));
      ++accepted;
    }
    total += static_cast<std::size_t>(accepted);
  }
  r.passed = worst >= -1e-9;
  r.detail = "min slack in H_0 " + sci(worst) + " over " + std::to_string(total) + " samples of W_J0, n = 1, 2";
  return r;
}

CriterionResult equivariance(const VerifyOptions& opt) {
  CriterionResult r{4, "equivariance"};
  std::mt19937_64 rng(opt.seed + 3);
  double worst = 0.0;
  for (int n : {1, 2}) {
    PantsMap pm(n);
    std::vector<TorusAffineMap> sym;
    for (int k = 1; k <= n + 1; ++k) sym.push_back(symmetry(n, k));
    for (int i = 0; i < 1000; ++i) {
      Vec y = random_interior(n, rng, 1e-3);
      if (i % 2) y = -y;
      Vec hy = pm.h(y);
      for (const auto& R : sym)
        worst = std::max(worst, (pm.h(R.apply(y)) - R.apply_base(hy)).cwiseAbs().maxCoeff());
      worst = std::max(worst, (pm.h(Vec(-y)) - hy).cwiseAbs().maxCoeff());
    }
  }
  r.passed = worst <= 1e-10;
  r.detail = "max deviation " + sci(worst) + " over 1000 samples per n, all R_k and the involution";
  return r;
}

CriterionResult legendre(const VerifyOptions& opt) {
  CriterionResult r{5, "legendre"};
  std::mt19937_64 rng(opt.seed + 4);
  PantsMap pm(1);
  ProjectionPair pp = project(1, {1}, 0);
  FlatTorus torus{2};
  double round_trip = 0.0, fd_err = 0.0;
  // Step relative to the distance from the face and from the vertex: G has
  // curvature of order 1/x there, a fixed step would measure its own error.
  const double rel = 1e-5;
  int done = 0;
  while (done < 1000) {
    Vec q = random_interior(1, rng, 1e-3);
    if (done % 2) q = -q;
    Vec x = pp.project_base(pm.h(q));
    Vec yf = pp.project_torus(q);
    if (x(0) < 1e-3 || std::abs(yf(0)) < 1e-3) continue;
    FiberSolution s = fiber_solve(pm, pp, x, yf);
    round_trip = std::max(round_trip, torus.distance(s.y, q));

    LegendreValue g = legendre_G(pm, pp, x, yf);
    double ex = rel * std::min(1.0, x(0)), ey = rel * std::min(1.0, std::abs(yf(0)));
    Vec xp = x, xm = x, yp = yf, ym = yf;
    xp(0) += ex;
    xm(0) -= ex;
    yp(0) += ey;
    ym(0) -= ey;
    double dx = (legendre_G(pm, pp, xp, yf).G - legendre_G(pm, pp, xm, yf).G) / (2 * ex);
    double dy = (legendre_G(pm, pp, x, yp).G - legendre_G(pm, pp, x, ym).G) / (2 * ey);
    fd_err = std::max(fd_err, std::abs(dx - g.dG_dx(0)) / std::max(1.0, std::abs(g.dG_dx(0))));
    fd_err = std::max(fd_err, std::abs(dy - g.dG_dy(0)) / std::max(1.0, std::abs(g.dG_dy(0))));
    ++done;
  }
  r.passed = round_trip <= 1e-8 && fd_err <= 1e-6;
  r.detail = "round trip " + sci(round_trip) + ", dG finite difference " + sci(fd_err) + " over 1000 points";
  return r;
}

CriterionResult decomposition_constants(const VerifyOptions&) {
  CriterionResult r{6, "decomposition"};
  namespace d = decomposition;
  double ez = std::abs(d::z_of_t(1.0 / 9.0) - 1.0 / 3.0);
  Vec q0 = d::q(0);
  double eq = (q0 - Vec::Constant(3, 1.0 / 3.0)).cwiseAbs().maxCoeff();
  double es = std::abs(boundary_residual(q0, 0));
  Vec want(3);
  want << 1.0 / 6.0, 1.0 / 6.0, 0.0;
  double et = (d::tau_intersection() - want).cwiseAbs().maxCoeff();
  double worst = std::max({ez, eq, es, et});
  r.passed = worst <= 1e-12;
  r.detail = "z(1/9) " + sci(ez) + ", q0 " + sci(eq) + ", q0 on S_0 " + sci(es) + ", tau1 meets tau2 " + sci(et);
  return r;
}

Vec fd(const std::function<Vec(double)>& f, double t, double h = 1e-6) { return (f(t + h) - f(t - h)) / (2 * h); }

CriterionResult appendix(const VerifyOptions& opt) {
  CriterionResult r{7, "appendix"};
  std::mt19937_64 rng(opt.seed + 5);
  std::uniform_real_distribution<double> U(0.0, 1.0);
  int gamma_fail = 0, eta_fail = 0, checks = 0;
  double gamma_margin = 1e300, eta_margin = 1e300;
  for (int n : {1, 2}) {
    for (int tuple = 0; tuple < 20; ++tuple) {
      std::vector<double> u(static_cast<std::size_t>(n));
      for (auto& v : u) v = U(rng);
      Vec s = simplex_point(u);
      Vec a(n + 1);
      a.head(n) = s;
      a(n) = kHalfPi - s.sum();
      std::sort(a.data(), a.data() + a.size(), std::greater<>());
      if (a.minCoeff() < 1e-3) {
        --tuple;
        continue;
      }
      for (int k = 1; k <= 99; ++k) {
        double t = k / 100.0;
        Vec g = fd([&](double s) { return gamma_curve(a, s); }, t);
        double tol = 1e-6 * std::max(1.0, g.cwiseAbs().maxCoeff());
        bool ok = g(0) < 0;
        gamma_margin = std::min(gamma_margin, -g(0));
        for (int j = 0; j < n; ++j) {
          ok = ok && g(j + 1) <= g(j) + tol;
          gamma_margin = std::min(gamma_margin, g(j) - g(j + 1) + tol);
        }
        if (!ok) ++gamma_fail;
        ++checks;
      }
    }
  }
  for (int tuple = 0; tuple < 20; ++tuple) {
    double a = kPi / 4 * U(rng), b = kPi / 4 * U(rng);
    if (a < 1e-3 || b < 1e-3) {
      --tuple;
      continue;
    }
    for (int k = 1; k <= 99; ++k) {
      double t = k / 100.0;
      Vec e = fd([&](double s) { return eta_curve(a, b, s); }, t);
      if (!(e(2) > 0 && e(0) < 0 && e(1) < 0)) ++eta_fail;
      eta_margin = std::min({eta_margin, e(2), -e(0), -e(1)});
      ++checks;
    }
  }
  r.passed = gamma_fail == 0 && eta_fail == 0;
  r.detail = "gamma chain failures " + std::to_string(gamma_fail) + ", eta sign failures " +
             std::to_string(eta_fail) + " of " + std::to_string(checks) + " grid checks; margins " +
             sci(gamma_margin) + ", " + sci(eta_margin);
  return r;
}

PlaneCurve load_curve(const VerifyOptions& opt, const char* name) {
  return fixture_curve(read_fixture(opt.fixtures / (std::string(name) + ".json")));
}

CriterionResult lift(const VerifyOptions& opt) {
  CriterionResult r{8, "lift"};
  auto t0 = std::chrono::steady_clock::now();
  PlaneCurve c = load_curve(opt, "triangle_curve");
  GluingSchedule sched = default_schedule(c);
  PLLift pl = pl_lift(c);
  const double ts[3] = {1.0, 0.5, 0.1};
  double H[3], residual = 0.0;
  for (int i = 0; i < 3; ++i) {
    validate(sched, c, ts[i]);
    LagrangianMesh m = smooth_lift(c, ts[i], sched, opt.resolution);
    residual = std::max(residual, symplectic_residual(m));
    H[i] = hausdorff_distance(m, pl, opt.resolution);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  double slope = std::log(H[0] / H[2]) / std::log(ts[0] / ts[2]);
  bool decreasing = H[0] > H[1] && H[1] > H[2];
  r.passed = residual < 1e-6 && decreasing && slope >= 0.8 && r.seconds < 60.0;
  r.detail = "residual " + sci(residual) + ", Hausdorff " + fmt("%.4f", H[0]) + " / " + fmt("%.4f", H[1]) +
             " / " + fmt("%.4f", H[2]) + " at t = 1, 0.5, 0.1, slope " + fmt("%.3f", slope);
  if (r.seconds >= 60.0) r.detail += "; runtime over 60 s";
  return r;
}

CriterionResult maslov(const VerifyOptions&) {
  CriterionResult r{9, "maslov"};
  PantsMap pm(1);
  long long w1 = phase_winding(pants_basis_loop(pm, 1, 1.0)).winding;
  long long w2 = phase_winding(pants_basis_loop(pm, 2, 1.0)).winding;
  r.passed = w1 == 0 && w2 == 0;
  r.detail = "windings " + std::to_string(w1) + ", " + std::to_string(w2) + " on the two basis loops";
  return r;
}

CriterionResult exactness(const VerifyOptions& opt) {
  CriterionResult r{10, "exactness"};
  bool line = exactness_check(load_curve(opt, "standard_line")).exact;
  bool four = exactness_check(load_curve(opt, "four_valent")).exact;
  PlaneCurve c = load_curve(opt, "triangle_curve");
  ExactnessReport rep = exactness_check(c);
  // The edge on x1 + 2 x2 = 1.
  std::optional<Rational> cf;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    bool on = e.direction[0] == -2 * e.direction[1] && e.base[0] + 2 * e.base[1] == 1;
    if (on) cf = rep.constants[i];
  }
  r.passed = line && four && !rep.exact && cf && *cf == 1;
  r.detail = std::string("standard line ") + (line ? "exact" : "not exact") + ", four-valent " +
             (four ? "exact" : "not exact") + ", triangle curve " + (rep.exact ? "exact" : "not exact") +
             " with c_f = " + (cf ? to_string(*cf) : std::string("none")) + " on x1 + 2 x2 = 1";
  return r;
}

CriterionResult topology(const VerifyOptions& opt) {
  CriterionResult r{11, "topology"};
  std::string d;
  bool ok = true;
  auto open = [&](const char* name, int chi, int genus, int punct) {
    PLLift pl = pl_lift(load_curve(opt, name));
    bool good = pl.euler == chi && pl.punctures == punct && (genus < 0 || pl.genus == genus);
    ok = ok && good;
    d += std::string(d.empty() ? "" : "; ") + name + " chi " + std::to_string(pl.euler) + " g " +
         std::to_string(pl.genus) + " p " + std::to_string(pl.punctures);
  };
  open("standard_line", -1, -1, 3);
  open("weighted_line_w2", -4, 0, 6);
  open("genus1_vertex", -3, 1, 3);
  auto closed = [&](const char* name, bool orientable, int chi) {
    Fixture f = read_fixture(opt.fixtures / (std::string(name) + ".json"));
    LiftTopology t = lift_topology(fixture_curve(f), *f.polygon);
    bool good = t.orientable == orientable && t.euler == chi && (!orientable || t.genus == 1);
    ok = ok && good;
    d += std::string("; ") + name + (t.orientable ? " orientable" : " non-orientable") + " chi " +
         std::to_string(t.euler);
  };
  closed("p2_torus", true, 0);
  closed("moebius_chain", false, -4);
  r.passed = ok;
  r.detail = d;
  return r;
}

CriterionResult monotone(const VerifyOptions& opt) {
  CriterionResult r{12, "monotone"};
  auto report = [&](const char* name) {
    Fixture f = read_fixture(opt.fixtures / (std::string(name) + ".json"));
    return monotone_report(fixture_curve(f), *f.polygon, default_disk_classes(*f.polygon));
  };
  auto pair = [](const MonotoneEntry& e) { return std::make_pair(e.mu, e.omega); };
  MonotoneReport p2 = report("p2_monotone");
  std::map<std::pair<long long, Rational>, int> counts;
  for (const auto& e : p2.entries) ++counts[pair(e)];
  bool p2_ok = counts.size() == 3 && counts[{6, Rational(3)}] == 1 && counts[{2, Rational(1)}] == 3 &&
               counts[{0, Rational(0)}] == 1 && p2.factor && *p2.factor == 2;

  MonotoneReport q = report("p1p1_monotone");
  int facets = 0;
  bool q_ok = true;
  for (const auto& e : q.entries)
    if (e.label.rfind("beta_", 0) == 0) {
      ++facets;
      q_ok = q_ok && pair(e) == std::make_pair(2LL, Rational(1));
    }
  q_ok = q_ok && facets == 4;
  r.passed = p2_ok && q_ok;
  std::string d = "P2:";
  for (const auto& e : p2.entries) d += " " + e.label + " (" + std::to_string(e.mu) + "," + to_string(e.omega) + ")";
  d += p2.factor ? ", factor " + to_string(*p2.factor) : ", not proportional";
  d += "; P1xP1:";
  for (const auto& e : q.entries) d += " " + e.label + " (" + std::to_string(e.mu) + "," + to_string(e.omega) + ")";
  r.detail = d;
  return r;
}

using Runner = CriterionResult (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"hessian", hessian},       {"boundary", boundary},
      {"region", region},         {"equivariance", equivariance},
      {"legendre", legendre},     {"decomposition", decomposition_constants},
      {"appendix", appendix},     {"lift", lift},
      {"maslov", maslov},         {"exactness", exactness},
      {"topology", topology},     {"monotone", monotone},
  };
  return r;
}

CriterionResult guarded(const std::string& name, int id, Runner f, const VerifyOptions& opt) {
  try {
    return f(opt);
  } catch (const Error& e) {
    return {id, name, false, std::string("error: ") + e.what()};
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

std::vector<CriterionResult> run_suite(const std::string& name, const VerifyOptions& opt) {
  std::vector<CriterionResult> out;
  int id = 0;
  for (const auto& [n, f] : registry()) {
    ++id;
    if (name == "all" || name == n) out.push_back(guarded(n, id, f, opt));
  }
  if (out.empty()) throw InputError("unknown verification suite '" + name + "'");
  return out;
}

std::string format_report(const std::vector<CriterionResult>& results, bool with_timing) {
  std::string s;
  for (const auto& r : results) {
    s += std::string(r.passed ? "PASS" : "FAIL") + " " + std::to_string(r.id) + " " + r.suite + ": " + r.detail;
    if (with_timing) s += fmt(" [%.2f s]", r.seconds);
    s += '\n';
  }
  return s;
}

}  // namespace lagpants::tools
