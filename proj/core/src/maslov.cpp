#include "lagpants/maslov.hpp"

#include <cmath>
#include <functional>

#include "lagpants/errors.hpp"

namespace lagpants {

namespace {

using V4 = Eigen::Vector4d;

TangentFrame orthonormal(const TangentFrame& f) {
  TangentFrame out;
  out.v = f.v.normalized();
  out.w = (f.w - f.w.dot(out.v) * out.v).normalized();
  return out;
}

// Flip b when its orientation disagrees with a.
TangentFrame align(const TangentFrame& a, const TangentFrame& b) {
  double g = a.v.dot(b.v) * a.w.dot(b.w) - a.v.dot(b.w) * a.w.dot(b.v);
  if (g >= 0) return b;
  return {b.v, -b.w};
}

double phase_step(const TangentFrame& a, const TangentFrame& b) {
  TangentFrame ua = orthonormal(a), ub = align(ua, orthonormal(b));
  return std::arg(holomorphic_volume(ub) / holomorphic_volume(ua));
}

TangentFrame hessian_frame(const PantsMap& pm, const Vec& y) {
  Mat H = pm.hessian(y);
  TangentFrame f;
  f.v << H(0, 0), H(1, 0), 1, 0;
  f.w << H(0, 1), H(1, 1), 0, 1;
  return f;
}

TangentFrame chart_frame(const PantsMap& pm, const ChartPoint& c) {
  FlatTorus torus{2};
  auto diff = [&](const ChartPoint& p, const ChartPoint& m, double h) {
    V4 out;
    out.head<2>() = (pm.h(p) - pm.h(m)) / (2 * h);
    out.tail<2>() = torus.difference(pm.to_torus(p), pm.to_torus(m)) / (2 * h);
    return out;
  };
  double ha = 1e-6 * c.alpha(0), ht = 1e-7;
  ChartPoint p = c, m = c;
  p.alpha(0) += ha;
  m.alpha(0) -= ha;
  TangentFrame f;
  f.v = diff(p, m, ha);
  p = c;
  m = c;
  p.t += ht;
  m.t -= ht;
  f.w = diff(p, m, ht);
  return f;
}

// First coordinate of h equal to level, along the chart at p_vertex with axis 1.
ChartPoint chart_on_level(const PantsMap& pm, int vertex, double t, double level) {
  ChartPoint c;
  c.vertex = vertex;
  c.axis = 1;
  c.t = t;
  c.alpha.resize(1);
  double lo = std::log(1e-14);
  double hi = std::log(kHalfPi / std::max(std::abs(t), 1e-300) - 1.0) - 1e-12;
  if (hi > std::log(1e14)) hi = std::log(1e14);
  auto f = [&](double la) {
    c.alpha(0) = std::exp(la);
    return pm.h(c)(0) - level;
  };
  if (!(f(lo) > 0)) throw NumericError("level is not reached on the chart");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    (f(mid) > 0 ? lo : hi) = mid;
  }
  c.alpha(0) = std::exp(0.5 * (lo + hi));
  return c;
}

void refine(const std::function<TangentFrame(double)>& at, double a, const TangentFrame& fa, double b,
            const TangentFrame& fb, double max_step, int depth, std::vector<TangentFrame>& out) {
  if (depth > 40 || std::abs(phase_step(fa, fb)) <= max_step) return;
  double m = 0.5 * (a + b);
  TangentFrame fm = at(m);
  refine(at, a, fa, m, fm, max_step, depth + 1, out);
  out.push_back(fm);
  refine(at, m, fm, b, fb, max_step, depth + 1, out);
}

// Samples [a, b) of a segment, refined to max_step.
void segment(const std::function<TangentFrame(double)>& at, double a, double b, double max_step,
             std::vector<TangentFrame>& out) {
  const int n = 64;
  TangentFrame prev = at(a);
  for (int i = 1; i <= n; ++i) {
    double p = a + (b - a) * i / n;
    TangentFrame cur = at(p);
    out.push_back(prev);
    refine(at, a + (b - a) * (i - 1) / n, prev, p, cur, max_step, 0, out);
    prev = cur;
  }
}

double wrap_pi(double v) { return v - kPi * std::floor(v / kPi); }

}  // namespace

std::complex<double> holomorphic_volume(const TangentFrame& f) {
  std::complex<double> a1(f.v(2), f.v(0)), a2(f.v(3), f.v(1));
  std::complex<double> b1(f.w(2), f.w(0)), b2(f.w(3), f.w(1));
  return a1 * b2 - a2 * b1;
}

WindingResult phase_winding(const std::vector<TangentFrame>& loop) {
  WindingResult r;
  r.samples = loop.size();
  if (loop.size() < 3) throw InputError("a loop needs at least three samples");
  TangentFrame first = orthonormal(loop.front());
  TangentFrame prev = first;
  double total = 0;
  for (std::size_t i = 1; i <= loop.size(); ++i) {
    TangentFrame cur = i < loop.size() ? align(prev, orthonormal(loop[i])) : align(prev, first);
    double step = std::arg(holomorphic_volume(cur) / holomorphic_volume(prev));
    r.max_step = std::max(r.max_step, std::abs(step));
    total += step;
    prev = cur;
  }
  // Closing alignment decides whether the loop reverses orientation.
  TangentFrame last = prev;
  double g = last.v.dot(first.v) * last.w.dot(first.w) - last.v.dot(first.w) * last.w.dot(first.v);
  r.orientation_preserved = g > 0;
  r.total_phase = total;
  r.winding = std::llround(total / (2 * kPi));
  return r;
}

std::vector<TangentFrame> pants_basis_loop(const PantsMap& pm, int leg, double level, double max_step) {
  if (pm.n != 1) throw InputError("basis loops are defined for the pair of pants in dimension 2");
  if (leg != 1 && leg != 2) throw InputError("leg must be 1 or 2");
  if (!(level > 0)) throw DomainError("level must be positive");
  const double delta = 0.05;
  ProjectionPair pp = project(1, {1}, 0);
  auto interior = [&](double y2) {
    Vec x(1), yf(1);
    x << level;
    yf << (y2 < kHalfPi ? y2 : y2 - kPi);
    FiberSolution sol = fiber_solve(pm, pp, x, yf);
    return hessian_frame(pm, sol.y);
  };
  auto near0 = [&](double t) { return chart_frame(pm, chart_on_level(pm, 0, t, level)); };
  auto near2 = [&](double t) { return chart_frame(pm, chart_on_level(pm, 2, t, level)); };
  double s_plus = wrap_pi(pm.to_torus(chart_on_level(pm, 2, delta, level))(1));
  double s_minus = wrap_pi(pm.to_torus(chart_on_level(pm, 2, -delta, level))(1));

  std::vector<TangentFrame> out;
  segment(near0, -delta, delta, max_step, out);
  segment(interior, delta, s_plus, max_step, out);
  segment(near2, delta, -delta, max_step, out);
  segment(interior, s_minus, kPi - delta, max_step, out);
  if (leg == 2)
    for (auto& f : out) {
      f.v = V4(f.v(1), f.v(0), f.v(3), f.v(2));
      f.w = V4(f.w(1), f.w(0), f.w(3), f.w(2));
    }
  return out;
}

std::vector<TangentFrame> cylinder_loop(const IPoint& d, int samples) {
  if (d.size() != 2) throw InputError("direction must be planar");
  TangentFrame f;
  f.v << static_cast<double>(d[0]), static_cast<double>(d[1]), 0, 0;
  f.w << 0, 0, static_cast<double>(-d[1]), static_cast<double>(d[0]);
  return std::vector<TangentFrame>(static_cast<std::size_t>(std::max(samples, 3)), f);
}

WindingResult maslov_winding(const LagrangianMesh& m, const std::vector<std::size_t>& loop) {
  std::vector<TangentFrame> frames;
  for (std::size_t i : loop) {
    if (i >= m.points.size()) throw InputError("loop index outside the mesh");
    frames.push_back({m.points[i].v, m.points[i].w});
  }
  return phase_winding(frames);
}

}  // namespace lagpants
