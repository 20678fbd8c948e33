#include "lagpants/pants.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lagpants/errors.hpp"

namespace lagpants {

namespace {

constexpr double kClosedTol = 1e-12;

double wrap(double v, double lo) { return v - kPi * std::floor((v - lo) / kPi); }

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

// Real (n+1)-th root with the sign of v.
double signed_root(double v, int n) {
  double r = std::pow(std::abs(v), 1.0 / (n + 1));
  return v < 0 ? -r : r;
}

Vec extended(const Vec& z) {
  Vec e(z.size() + 1);
  e(0) = kHalfPi - z.sum();
  e.tail(z.size()) = z;
  return e;
}

bool in_closed_simplex(const Vec& z, double tol) {
  Vec e = extended(z);
  return e.minCoeff() >= -tol;
}

// Representative z of y in the closed plus simplex and the sign s with y = s z mod pi.
std::pair<Vec, double> plus_rep(const Vec& y, double tol = kClosedTol) {
  Vec p(y.size()), m(y.size());
  for (int i = 0; i < y.size(); ++i) {
    p(i) = wrap(y(i), -kPi / 4);
    m(i) = -wrap(y(i), -3 * kPi / 4);
  }
  if (in_closed_simplex(p, tol)) return {p, 1.0};
  if (in_closed_simplex(m, tol)) return {m, -1.0};
  throw DomainError("point is outside the coamoeba");
}

Mat to_mat(const IMatrix& m) {
  Mat out(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m[i][j]);
  return out;
}

// F, h and Hessian of the unscaled potential at an interior point of the plus simplex.
struct PlusEval {
  double F = 0.0;
  Vec f;  // gradient of log(cos sum * prod sin)
  Mat f2;
};

PlusEval eval_plus(const Vec& z, int n, bool want_hessian) {
  Vec e = extended(z);
  if (e.minCoeff() <= 0.0) throw DomainError("point is on the boundary of the coamoeba");
  double logp = 0.0;
  for (int j = 0; j < e.size(); ++j) logp += std::log(std::sin(e(j)));
  PlusEval out;
  out.F = std::exp(logp / (n + 1));
  double s = z.sum();
  double ts = std::tan(s);
  out.f.resize(z.size());
  for (int i = 0; i < z.size(); ++i) out.f(i) = 1.0 / std::tan(z(i)) - ts;
  if (want_hessian) {
    double sec2 = 1.0 + ts * ts;
    out.f2 = Mat::Constant(z.size(), z.size(), -sec2);
    for (int i = 0; i < z.size(); ++i) {
      double si = std::sin(z(i));
      out.f2(i, i) -= 1.0 / (si * si);
    }
  }
  return out;
}

}  // namespace

PantsMap::PantsMap(int n_, double lambda_) : n(n_), lambda(lambda_) {
  if (n < 0) throw InputError("dimension must be non-negative");
  if (!(lambda > 0)) throw InputError("scale must be positive");
}

double PantsMap::F(const Vec& y) const {
  if (y.size() != n + 1) throw InputError("point has the wrong dimension");
  auto [z, s] = plus_rep(y);
  Vec e = extended(z);
  double p = 1.0;
  for (int j = 0; j < e.size(); ++j) p *= std::max(0.0, std::sin(e(j)));
  return s * lambda * std::pow(p, 1.0 / (n + 1));
}

Vec PantsMap::h(const Vec& y) const {
  if (y.size() != n + 1) throw InputError("point has the wrong dimension");
  auto [z, s] = plus_rep(y);
  (void)s;
  PlusEval ev = eval_plus(z, n, false);
  return lambda * ev.F / (n + 1) * ev.f;
}

Mat PantsMap::hessian(const Vec& y) const {
  if (y.size() != n + 1) throw InputError("point has the wrong dimension");
  auto [z, s] = plus_rep(y);
  PlusEval ev = eval_plus(z, n, true);
  double m = n + 1.0;
  Mat hess = ev.F * (ev.f * ev.f.transpose() / (m * m) + ev.f2 / m);
  return s * lambda * hess;
}

namespace {

double chart_Q(const ChartPoint& c) {
  double s = 1.0 + c.alpha.sum();
  double q = std::cos(c.t * s) * sinc(c.t);
  for (int j = 0; j < c.alpha.size(); ++j) q *= c.alpha(j) * sinc(c.t * c.alpha(j));
  return q;
}

}  // namespace

double PantsMap::F(const ChartPoint& c) const {
  if (c.alpha.size() != n) throw InputError("chart point has the wrong dimension");
  double q = chart_Q(c);
  if (q < 0) throw DomainError("chart point is outside the coamoeba");
  return lambda * c.t * std::pow(q, 1.0 / (n + 1));
}

Vec PantsMap::h(const ChartPoint& c) const {
  if (c.alpha.size() != n) throw InputError("chart point has the wrong dimension");
  for (int j = 0; j < n; ++j)
    if (!(c.alpha(j) > 0)) throw DomainError("chart ratios must be positive");
  double q = chart_Q(c);
  if (!(q > 0)) throw DomainError("chart point is outside the open coamoeba");
  double root = std::pow(q, 1.0 / (n + 1));
  double s = 1.0 + c.alpha.sum();
  double tt = c.t * std::tan(c.t * s);
  Vec hc(n + 1);
  int j = 0;
  for (int i = 0; i <= n; ++i) {
    double ci;
    if (i == c.axis) {
      ci = std::cos(c.t) / sinc(c.t);
    } else {
      double a = c.alpha(j++);
      ci = std::cos(c.t * a) / (a * sinc(c.t * a));
    }
    hc(i) = lambda * root / (n + 1) * (ci - tt);
  }
  if (c.vertex == 0) return hc;
  return symmetry(n, c.vertex).apply_base(hc);
}

Vec PantsMap::to_torus(const ChartPoint& c) const {
  BlowupChart b;
  b.n = n;
  b.vertex = c.vertex;
  b.axis = c.axis;
  return b.to_torus(c.alpha, c.t);
}

std::pair<int, double> PantsMap::nearest_vertex(const Vec& y) const {
  Coamoeba co = standard_coamoeba(n);
  int best = 0;
  double dist = 1e300;
  for (int k = 0; k <= n + 1; ++k) {
    double d = co.torus.distance(y, co.vertex(k));
    if (d < dist) {
      dist = d;
      best = k;
    }
  }
  return {best, dist};
}

ChartPoint PantsMap::chart_of(const Vec& y) const {
  auto [k, dist] = nearest_vertex(y);
  (void)dist;
  Vec yc = k == 0 ? y : symmetry(n, k).apply(y);
  FlatTorus torus{n + 1};
  yc = torus.difference(yc, Vec::Zero(n + 1));
  int axis = 0;
  for (int i = 1; i <= n; ++i)
    if (std::abs(yc(i)) > std::abs(yc(axis))) axis = i;
  ChartPoint c;
  c.vertex = k;
  c.axis = axis;
  c.t = yc(axis);
  if (c.t == 0.0) throw DomainError("vertex itself has no chart coordinates; supply a direction");
  c.alpha.resize(n);
  int j = 0;
  for (int i = 0; i <= n; ++i)
    if (i != axis) c.alpha(j++) = yc(i) / c.t;
  return c;
}

Vec PantsMap::h_auto(const Vec& y) const {
  if (nearest_vertex(y).second < chart_switch) return h(chart_of(y));
  return h(y);
}

Vec h_exceptional(int n, const Vec& alpha, double lambda) {
  if (alpha.size() != n) throw InputError("ratio vector has the wrong dimension");
  double prod = alpha.prod();
  if (!(prod > 0)) throw DomainError("ratios must be positive");
  double root = std::pow(prod, 1.0 / (n + 1));
  Vec out(n + 1);
  for (int j = 0; j < n; ++j) out(j) = lambda * root / ((n + 1) * alpha(j));
  out(n) = lambda * root / (n + 1);
  return out;
}

double boundary_residual(const Vec& x, int k) {
  int n = static_cast<int>(x.size()) - 1;
  Vec xs = k == 0 ? x : symmetry(n, k).apply_base(x);
  return std::pow(n + 1.0, n + 1.0) * xs.prod() - 1.0;
}

RegionClass region_membership(const Vec& x, double tol) {
  int n = static_cast<int>(x.size()) - 1;
  if (n < 0) throw InputError("empty point");
  RegionClass rc;
  for (int k = 0; k <= n + 1; ++k) {
    Vec xs = k == 0 ? x : symmetry(n, k).apply_base(x);
    if (xs.minCoeff() < -tol) continue;
    double r = std::pow(n + 1.0, n + 1.0) * xs.prod() - 1.0;
    if (r <= tol) rc.inside.push_back(k);
    if (std::abs(r) <= tol && xs.minCoeff() > tol) rc.on_boundary.push_back(k);
  }
  return rc;
}

bool in_delta(int n, const Vec& y, int j, int k, double tol) {
  if (y.size() != n + 1) throw InputError("point has the wrong dimension");
  Vec e = extended(plus_rep(y, 1e-9).first);
  return e(k) >= e(j) - tol;
}

bool in_W(int n, const Vec& y, const std::vector<int>& J, double tol) {
  for (int k = 0; k <= n + 1; ++k) {
    if (std::find(J.begin(), J.end(), k) != J.end()) continue;
    for (int j : J)
      if (!in_delta(n, y, j, k, tol)) return false;
  }
  return true;
}

bool in_V(const Vec& x, const std::vector<int>& J, double tol) {
  int n = static_cast<int>(x.size()) - 1;
  Vec xe(n + 2);
  xe(0) = 0.0;
  xe.tail(n + 1) = x;
  for (int k = 0; k <= n + 1; ++k) {
    if (std::find(J.begin(), J.end(), k) != J.end()) continue;
    for (int j : J)
      if (xe(j) < xe(k) - tol) return false;
  }
  return true;
}

CellClass cell_classify(int n, const Vec& y, double tol) {
  if (y.size() != n + 1) throw InputError("point has the wrong dimension");
  auto [z, s] = plus_rep(y, 1e-9);
  Vec e = extended(z);
  CellClass cc;
  cc.plus = s > 0;
  int m = n + 2;
  for (unsigned mask = 1; mask + 1 < (1u << m); ++mask) {
    std::vector<int> J;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) J.push_back(i);
    bool all = true;
    for (int k = 0; k < m; ++k) {
      if (mask & (1u << k)) continue;
      bool ok = true;
      for (int j : J)
        if (e(k) < e(j) - tol) ok = false;
      if (ok) cc.W_k.emplace_back(J, k);
      all = all && ok;
    }
    if (all) cc.W.push_back(J);
  }
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < j; ++k)
      if (std::abs(e(j) - e(k)) <= tol) cc.delta_boundary.emplace_back(j, k);
  return cc;
}

Vec ProjectionPair::project_torus(const Vec& y) const {
  Vec ys = k == 0 ? y : to_std.apply(y);
  auto [z, s] = plus_rep(ys, 1e-9);
  std::vector<int> fc = fixed_coords();
  Vec out(static_cast<Eigen::Index>(fc.size()));
  for (std::size_t i = 0; i < fc.size(); ++i) out(static_cast<Eigen::Index>(i)) = s * z(fc[i]);
  return out;
}

Vec ProjectionPair::project_base(const Vec& x) const {
  Vec xs = k == 0 ? x : to_std.apply_base(x);
  std::vector<int> fc = free_coords();
  Vec out(static_cast<Eigen::Index>(fc.size()));
  for (std::size_t i = 0; i < fc.size(); ++i) out(static_cast<Eigen::Index>(i)) = xs(fc[i]);
  return out;
}

std::vector<int> ProjectionPair::free_coords() const {
  std::vector<int> out;
  for (int j : J_std) out.push_back(j - 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> ProjectionPair::fixed_coords() const {
  std::vector<int> fr = free_coords(), out;
  for (int i = 0; i <= n; ++i)
    if (std::find(fr.begin(), fr.end(), i) == fr.end()) out.push_back(i);
  return out;
}

ProjectionPair project(int n, const std::vector<int>& J, int k) {
  if (k < 0 || k > n + 1) throw InputError("auxiliary index out of range");
  if (J.empty() || static_cast<int>(J.size()) > n + 1) throw InputError("face index set has the wrong size");
  std::vector<int> sorted = J;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw InputError("repeated index in J");
  for (int j : sorted) {
    if (j < 0 || j > n + 1) throw InputError("face index out of range");
    if (j == k) throw InputError("auxiliary index must not lie in J");
  }
  ProjectionPair pp;
  pp.n = n;
  pp.J = sorted;
  pp.k = k;
  if (k != 0) {
    pp.to_std = symmetry(n, k);
    pp.from_std = pp.to_std;
  }
  for (int j : sorted) pp.J_std.push_back(j == 0 ? k : j);
  std::sort(pp.J_std.begin(), pp.J_std.end());
  return pp;
}

namespace {

// Solves h_free(u, y_fixed) = x for u in the open fibre of the plus simplex.
FiberSolution solve_fiber_plus(const PantsMap& pm, const std::vector<int>& free,
                               const std::vector<int>& fixed, const Vec& x, const Vec& yf) {
  int d = pm.n + 1;
  int l = static_cast<int>(free.size());
  double b = kHalfPi - yf.sum();
  if (!(b > 0)) throw DomainError("face point is outside the coamoeba");
  for (int i = 0; i < yf.size(); ++i)
    if (!(yf(i) > 0)) throw DomainError("face point is outside the open face");

  auto assemble = [&](const Vec& u) {
    Vec y(d);
    for (int i = 0; i < l; ++i) y(free[static_cast<std::size_t>(i)]) = u(i);
    for (std::size_t i = 0; i < fixed.size(); ++i) y(fixed[i]) = yf(static_cast<Eigen::Index>(i));
    return y;
  };
  auto feasible = [&](const Vec& u) { return u.minCoeff() > 0 && u.sum() < b; };
  auto grad = [&](const Vec& u) {
    Vec hy = pm.h(assemble(u));
    Vec g(l);
    for (int i = 0; i < l; ++i) g(i) = hy(free[static_cast<std::size_t>(i)]) - x(i);
    return g;
  };
  double scale = 1.0 + x.norm();
  double gtol = 1e-12 * scale;
  const int max_iter = 80;
  FiberSolution sol;

  if (l == 1) {
    double lo = 0.0, hi = b, u = b / 2;
    for (int it = 0; it < 200; ++it) {
      Vec uu(1);
      uu(0) = u;
      double g = grad(uu)(0);
      sol.iterations = it + 1;
      if (std::abs(g) <= gtol) break;
      if (g > 0) lo = u; else hi = u;
      Mat hs = pm.hessian(assemble(uu));
      double slope = hs(free[0], free[0]);
      double next = u - g / slope;
      if (!(next > lo && next < hi) || it >= max_iter) {
        next = 0.5 * (lo + hi);
        sol.used_fallback = sol.used_fallback || it >= max_iter;
      }
      if (std::abs(next - u) < 1e-15 * (1 + u)) {
        u = next;
        break;
      }
      u = next;
    }
    Vec uu(1);
    uu(0) = u;
    sol.y = assemble(uu);
    sol.residual = std::abs(grad(uu)(0));
    return sol;
  }

  auto phi = [&](const Vec& u) { return pm.F(assemble(u)) - x.dot(u); };
  Vec u = Vec::Constant(l, b / (l + 1));
  bool converged = false;
  for (int it = 0; it < max_iter; ++it) {
    sol.iterations = it + 1;
    Vec g = grad(u);
    if (g.norm() <= gtol) {
      converged = true;
      break;
    }
    Mat hy = pm.hessian(assemble(u));
    Mat hs(l, l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) hs(i, j) = hy(free[static_cast<std::size_t>(i)], free[static_cast<std::size_t>(j)]);
    Vec dir = -hs.ldlt().solve(g);
    if (g.dot(dir) <= 0) dir = g;
    double step = 1.0;
    double f0 = phi(u);
    while (step > 1e-20) {
      Vec cand = u + step * dir;
      if (feasible(cand) && phi(cand) >= f0 + 1e-4 * step * g.dot(dir)) break;
      step *= 0.5;
    }
    Vec delta = step * dir;
    u += delta;
    if (delta.norm() < 1e-15) {
      converged = grad(u).norm() <= 1e3 * gtol;
      break;
    }
  }
  if (!converged) {
    // Cyclic coordinate bisection: each coordinate map is strictly decreasing.
    sol.used_fallback = true;
    for (int cycle = 0; cycle < 2000; ++cycle) {
      for (int i = 0; i < l; ++i) {
        double others = u.sum() - u(i);
        double lo = 0.0, hi = b - others;
        for (int it = 0; it < 100; ++it) {
          double mid = 0.5 * (lo + hi);
          Vec c = u;
          c(i) = mid;
          if (grad(c)(i) > 0) lo = mid; else hi = mid;
        }
        u(i) = 0.5 * (lo + hi);
      }
      if (grad(u).norm() <= 1e3 * gtol) break;
    }
  }
  sol.y = assemble(u);
  sol.residual = grad(u).norm();
  if (!(sol.residual <= 1e-8 * scale)) {
    std::ostringstream os;
    os << "fibre solve did not converge: residual " << sol.residual << " after " << sol.iterations
       << " iterations";
    throw NumericError(os.str());
  }
  return sol;
}

}  // namespace

FiberSolution fiber_solve(const PantsMap& pm, const ProjectionPair& pp, const Vec& x, const Vec& y_face) {
  std::vector<int> free = pp.free_coords(), fixed = pp.fixed_coords();
  if (x.size() != static_cast<Eigen::Index>(free.size()) || y_face.size() != static_cast<Eigen::Index>(fixed.size()))
    throw InputError("projection data has the wrong dimension");
  for (int i = 0; i < x.size(); ++i)
    if (!(x(i) > 0)) throw DomainError("base point is not in the interior of the cone");
  double sign = 1.0;
  if (y_face.size() > 0 && y_face.maxCoeff() <= 0 && y_face.minCoeff() < 0) sign = -1.0;
  if (y_face.size() > 0 && y_face.cwiseAbs().maxCoeff() == 0.0)
    throw DomainError("face point is a vertex; use the blow-up fibre");
  FiberSolution sol = solve_fiber_plus(pm, free, fixed, x, sign * y_face);
  sol.y *= sign;
  if (pp.k != 0) sol.y = pp.from_std.apply(sol.y);
  return sol;
}

ChartPoint fiber_solve_vertex(const PantsMap& pm, const ProjectionPair& pp, const Vec& x, const Vec& y_dir) {
  std::vector<int> free = pp.free_coords(), fixed = pp.fixed_coords();
  int n = pm.n;
  int l = static_cast<int>(free.size());
  if (fixed.empty()) throw InputError("vertex fibre needs at least one face coordinate");
  if (x.size() != l || y_dir.size() != static_cast<Eigen::Index>(fixed.size()))
    throw InputError("projection data has the wrong dimension");
  for (int i = 0; i < l; ++i)
    if (!(x(i) > 0)) throw DomainError("base point is not in the interior of the cone");
  Vec beta = y_dir / y_dir(y_dir.size() - 1);
  if (!(beta.minCoeff() > 0)) throw DomainError("direction is not inside the face");
  double A = beta.prod();
  double s = std::pow(A * std::pow(pm.lambda, l) / (std::pow(n + 1.0, l) * x.prod()), 1.0 / (n + 1 - l));
  int axis = fixed.back();
  Vec ratios(n + 1);
  for (int i = 0; i < l; ++i) ratios(free[static_cast<std::size_t>(i)]) = pm.lambda * s / ((n + 1) * x(i));
  for (std::size_t i = 0; i < fixed.size(); ++i) ratios(fixed[i]) = beta(static_cast<Eigen::Index>(i));
  ChartPoint c;
  c.vertex = pp.k;
  c.axis = axis;
  c.t = 0.0;
  c.alpha.resize(n);
  int j = 0;
  for (int i = 0; i <= n; ++i)
    if (i != axis) c.alpha(j++) = ratios(i);
  return c;
}

LegendreValue legendre_G(const PantsMap& pm, const ProjectionPair& pp, const Vec& x, const Vec& y_face) {
  FiberSolution sol = fiber_solve(pm, pp, x, y_face);
  Vec ys = pp.k == 0 ? sol.y : pp.to_std.apply(sol.y);
  std::vector<int> free = pp.free_coords(), fixed = pp.fixed_coords();
  Vec hs = pm.h(ys);
  auto [z, sgn] = plus_rep(ys, 1e-9);
  Vec yrep = sgn * z;
  LegendreValue out;
  out.q = sol.y;
  out.dG_dx.resize(static_cast<Eigen::Index>(free.size()));
  out.dG_dy.resize(static_cast<Eigen::Index>(fixed.size()));
  out.G = -pm.F(ys);
  for (std::size_t i = 0; i < free.size(); ++i) {
    out.dG_dx(static_cast<Eigen::Index>(i)) = yrep(free[i]);
    out.G += x(static_cast<Eigen::Index>(i)) * yrep(free[i]);
  }
  for (std::size_t i = 0; i < fixed.size(); ++i) out.dG_dy(static_cast<Eigen::Index>(i)) = -hs(fixed[i]);
  return out;
}

LegendreValue legendre_full(const PantsMap& pm, const Vec& x) {
  int d = pm.n + 1;
  if (x.size() != d) throw InputError("point has the wrong dimension");
  std::vector<int> free;
  for (int i = 0; i < d; ++i) free.push_back(i);
  FiberSolution sol = solve_fiber_plus(pm, free, {}, x, Vec(0));
  LegendreValue out;
  out.q = sol.y;
  out.G = x.dot(sol.y) - pm.F(sol.y);
  out.dG_dx = sol.y;
  out.dG_dy = Vec(0);
  return out;
}

namespace decomposition {

double z_of_t(double t) {
  if (t < 1.0 / 9.0) throw DomainError("t must be at least 1/9");
  double z = 1.0 / 3.0;
  for (int it = 0; it < 100; ++it) {
    double f = 18 * z * z * z + 27 * t * z * z - 1;
    double df = 54 * z * z + 54 * t * z;
    double next = z - f / df;
    if (next <= 0) next = z / 2;
    if (std::abs(next - z) < 1e-17) {
      z = next;
      break;
    }
    z = next;
  }
  return z;
}

Vec q(int k) {
  Vec q0 = Vec::Constant(3, 1.0 / 3.0);
  if (k == 0) return q0;
  return symmetry(2, k).apply_base(q0);
}

Vec q_t(int k, double t) {
  double z = z_of_t(t);
  Vec q0(3);
  q0 << 2.0 * z / 3.0 + t, z, z;
  if (k == 0) return q0;
  if (k != 2 && k != 3) throw InputError("q_{k,t} is defined for k = 0, 2, 3");
  return symmetry(2, k).apply_base(q0);
}

double section_coordinate(const Vec& x) { return x(0) - (x(1) + x(2)) / 3.0; }

double tau1(double x2) {
  if (!(x2 > 0) || x2 > 1.0 / 6.0) throw DomainError("tau_1 is parametrised by 0 < x_2 <= 1/6");
  return 1.0 / (108.0 * x2 * x2) - x2;
}

double tau2(double x1) { return tau1(x1); }

Vec tau_intersection() {
  Vec v(3);
  v << 1.0 / 6.0, tau1(1.0 / 6.0), 0.0;
  return v;
}

bool in_Q12(double x1, double x2, double tol) {
  if (x1 < -tol || x2 < -tol) return false;
  double m = std::min(x1, x2);
  return 108.0 * m * m * (x1 + x2) >= 1.0 - tol;
}

namespace {

// Barycentric containment in conv(pts) for affinely independent points.
bool in_simplex(const std::vector<Vec>& pts, const Vec& x, double tol) {
  int k = static_cast<int>(pts.size()) - 1;
  Mat m(x.size(), k);
  for (int i = 0; i < k; ++i) m.col(i) = pts[static_cast<std::size_t>(i + 1)] - pts[0];
  Vec lam = m.colPivHouseholderQr().solve(x - pts[0]);
  if ((m * lam - (x - pts[0])).norm() > tol * (1 + x.norm())) return false;
  return lam.minCoeff() >= -tol && lam.sum() <= 1 + tol;
}

}  // namespace

bool in_H_empty(const Vec& x, double tol) { return in_simplex({q(0), q(1), q(2), q(3)}, x, tol); }

bool in_K1(const Vec& x, double tol) {
  double t = section_coordinate(x);
  if (t < 1.0 / 9.0 - tol) return false;
  t = std::max(t, 1.0 / 9.0);
  return in_simplex({q_t(0, t), q_t(2, t), q_t(3, t)}, x, tol);
}

}  // namespace decomposition

Vec gamma_curve(const Vec& a, double t) {
  if (a.size() < 1) throw InputError("empty weight vector");
  if (a.minCoeff() <= 0 || std::abs(a.sum() - kHalfPi) > 1e-12)
    throw DomainError("weights must be positive with sum pi/2");
  if (!(t > 0 && t < 1)) throw DomainError("t must lie in (0, 1)");
  PantsMap pm(static_cast<int>(a.size()) - 1);
  return pm.h(Vec(t * a));
}

Vec eta_curve(double a, double b, double t) {
  if (!(a > 0 && a < kPi / 4 && b > 0 && b < kPi / 4)) throw DomainError("a and b must lie in (0, pi/4)");
  if (!(t > 0 && t < 1)) throw DomainError("t must lie in (0, 1)");
  Vec y(3);
  y << (kHalfPi - b) * t, b * t, (1 - t) * a;
  return PantsMap(2).h(y);
}

double covering_F(const PantsMap& pm, const CoveringModel& m, const Vec& y) { return pm.F(m.beta(y)); }

Vec covering_h(const PantsMap& pm, const CoveringModel& m, const Vec& y) {
  return to_mat(m.B) * pm.h(m.beta(y));
}

}  // namespace lagpants
