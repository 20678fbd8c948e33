#include "lagpants/lift.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <ostream>

#include <boost/geometry.hpp>
#include <boost/geometry/index/rtree.hpp>

#include "lagpants/errors.hpp"

namespace lagpants {

namespace {

using V2 = Eigen::Vector2d;
using V4 = Eigen::Vector4d;
using M2 = Eigen::Matrix2d;

constexpr double kInf = std::numeric_limits<double>::infinity();

V2 to_v2(const QPoint& p) { return V2(to_double(p[0]), to_double(p[1])); }
V2 to_v2(const IPoint& p) { return V2(static_cast<double>(p[0]), static_cast<double>(p[1])); }

M2 to_m2(const IMatrix& m) {
  M2 out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out(i, j) = static_cast<double>(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return out;
}

IPoint rot(const IPoint& d) { return {-d[1], d[0]}; }

double wrap_pi(double v) { return v - kPi * std::floor(v / kPi); }
V2 reduce(const V2& y) { return V2(wrap_pi(y(0)), wrap_pi(y(1))); }
// Shortest representative in [-pi/2, pi/2).
double centered(double v) { return v - kPi * std::floor(v / kPi + 0.5); }

double segment_distance(const V2& p, const V2& a, const V2& b) {
  V2 ab = b - a;
  double l2 = ab.squaredNorm();
  double s = l2 > 0 ? std::clamp((p - a).dot(ab) / l2, 0.0, 1.0) : 0.0;
  return (p - a - s * ab).norm();
}

// Convex polygon, counterclockwise, possibly degenerate.
double polygon_distance(const V2& p, const std::vector<V2>& poly) {
  if (poly.size() == 1) return (p - poly[0]).norm();
  bool inside = poly.size() >= 3;
  double best = kInf;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const V2& a = poly[i];
    const V2& b = poly[(i + 1) % poly.size()];
    V2 e = b - a;
    double cr = e(0) * (p(1) - a(1)) - e(1) * (p(0) - a(0));
    if (cr < -1e-14) inside = false;
    best = std::min(best, segment_distance(p, a, b));
  }
  return inside ? 0.0 : best;
}

// Distance on the torus R^2 / pi Z^2 from y to a compact convex polygon.
double torus_polygon_distance(const V2& y, const std::vector<V2>& poly) {
  V2 c = V2::Zero();
  for (const auto& p : poly) c += p;
  c /= static_cast<double>(poly.size());
  double diam = 0;
  for (const auto& p : poly) diam = std::max(diam, (p - c).norm());
  V2 yc = c + V2(centered(y(0) - c(0)), centered(y(1) - c(1)));
  int R = static_cast<int>(std::ceil(diam / kPi)) + 1;
  double best = kInf;
  for (int a = -R; a <= R; ++a)
    for (int b = -R; b <= R; ++b) best = std::min(best, polygon_distance(yc + kPi * V2(a, b), poly));
  return best;
}

long long twice_area(const std::vector<IPoint>& poly) {
  long long s = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& a = poly[i];
    const auto& b = poly[(i + 1) % poly.size()];
    s += a[0] * b[1] - a[1] * b[0];
  }
  return std::llabs(s);
}

double edge_length_param(const PlaneCurve& c, const CurveEdge& e) {
  V2 d = to_v2(e.direction);
  V2 a = to_v2(c.vertices[static_cast<std::size_t>(e.tail)]);
  V2 b = to_v2(c.vertices[static_cast<std::size_t>(e.head)]);
  return (b - a).dot(d) / d.squaredNorm();
}

V2 edge_base(const PlaneCurve& c, const CurveEdge& e) {
  return e.is_line() ? to_v2(e.base) : to_v2(c.vertices[static_cast<std::size_t>(e.tail)]);
}

struct Local {
  V2 origin;
  M2 A_inv;
  M2 At;
  V2 y0;

  V2 x(const V2& x_loc) const { return origin + A_inv * x_loc; }
  V2 y(const V2& y_loc) const { return At * y_loc + y0; }
  V4 tangent(const V4& v) const {
    V4 out;
    out.head<2>() = A_inv * v.head<2>();
    out.tail<2>() = At * v.tail<2>();
    return out;
  }
};

Local make_local(const AffineFrame& f) {
  Local l;
  l.origin = to_v2(f.origin);
  l.A_inv = to_m2(f.A_inv);
  l.At = to_m2(f.A).transpose();
  l.y0 = kHalfPi * to_v2(f.torus_origin);
  return l;
}

// Symmetry carrying leg 1 of the standard pants to leg j.
TorusAffineMap leg_symmetry(int leg) {
  if (leg == 1) {
    TorusAffineMap m;
    m.T = identity_matrix(2);
    m.base = identity_matrix(2);
    m.shift = {0, 0};
    return m;
  }
  if (leg == 2) return permutation_symmetry(1, {0, 2, 1});
  return symmetry(1, 1);
}

// Coordinate along leg j of the standard pants.
double leg_coordinate(int leg, const V2& x_loc) {
  if (leg == 1) return x_loc(0);
  if (leg == 2) return x_loc(1);
  return -x_loc(0);
}

struct KiteSample {
  V2 x, y;
  V4 v, w;
  bool analytic = true;
};

V2 kite_boundary(double phi) {
  const V2 a(kPi / 4, 0), b(kPi / 6, kPi / 6), d(0, kPi / 4);
  if (phi < 0.5) return a + (b - a) * (2 * phi);
  return b + (d - b) * (2 * phi - 1);
}

double cluster(int j, int n) { return 0.5 * (1 - std::cos(kPi * (j + 0.5) / n)); }

ChartPoint chart_point(int k, const V2& q, double t_scale) {
  ChartPoint c;
  c.vertex = k;
  c.axis = q(1) > q(0) ? 1 : 0;
  c.alpha.resize(1);
  c.alpha(0) = q(1 - c.axis) / q(c.axis);
  c.t = t_scale * q(c.axis);
  return c;
}

KiteSample chart_sample(const PantsMap& pm, const ChartPoint& c) {
  FlatTorus torus{2};
  auto eval = [&](const ChartPoint& p) { return std::make_pair(V2(pm.h(p)), V2(pm.to_torus(p))); };
  auto [x, y] = eval(c);
  KiteSample s;
  s.x = x;
  s.y = y;
  s.analytic = false;
  double ha = 1e-6 * c.alpha(0), ht = 1e-7;
  ChartPoint p = c, m = c;
  p.alpha(0) += ha;
  m.alpha(0) -= ha;
  auto [xp, yp] = eval(p);
  auto [xm, ym] = eval(m);
  s.v << (xp - xm) / (2 * ha), V2(torus.difference(yp, ym)) / (2 * ha);
  p = c;
  m = c;
  p.t += ht;
  m.t -= ht;
  auto [xp2, yp2] = eval(p);
  auto [xm2, ym2] = eval(m);
  s.w << (xp2 - xm2) / (2 * ht), V2(torus.difference(yp2, ym2)) / (2 * ht);
  return s;
}

KiteSample torus_sample(const PantsMap& pm, const V2& y) {
  Vec yy = y;
  Mat H = pm.hessian(yy);
  KiteSample s;
  s.x = pm.h(yy);
  s.y = y;
  s.v << H(0, 0), H(1, 0), 1, 0;
  s.w << H(0, 1), H(1, 1), 0, 1;
  return s;
}

// Standard pants at scale lambda, sampled on the six kites of the two halves.
// Rows run over tau = i / n_tau, columns over the kite boundary.
template <class Visit>
void sample_pants(const PantsMap& pm, int n_tau, int n_phi, Visit&& visit) {
  for (int k = 0; k <= 2; ++k) {
    TorusAffineMap R = k == 0 ? leg_symmetry(1) : symmetry(1, k);
    for (int sign : {1, -1}) {
      for (int i = 0; i <= n_tau; ++i) {
        double tau = static_cast<double>(i) / n_tau;
        for (int j = 0; j < n_phi; ++j) {
          V2 q = kite_boundary(cluster(j, n_phi));
          V2 yc = sign * tau * q;
          KiteSample s;
          if (yc.norm() < pm.chart_switch) {
            s = chart_sample(pm, chart_point(k, q, sign * tau));
          } else {
            s = torus_sample(pm, V2(R.apply(yc)));
          }
          visit(k, sign, i, j, s);
        }
      }
    }
  }
}

struct CollarSample {
  V2 x, y;
  V4 v, w;
};

// Collar over leg 1 of the standard pants at (x1, y2): the graph of d(eta G).
CollarSample collar_sample(const PantsMap& pm, const ProjectionPair& pp, const LegSchedule& leg, double x1,
                           double y2) {
  const Cutoff& eta = cutoff();
  double width = leg.r3 - leg.r2;
  double s = (x1 - leg.r2) / width;
  double e0 = eta.value(s), e1 = eta.d1(s) / width, e2 = eta.d2(s) / (width * width);
  CollarSample out;
  if (e0 == 0.0 && e1 == 0.0 && e2 == 0.0) {
    out.x = V2(x1, 0);
    out.y = V2(0, y2);
    out.v << 1, 0, 0, 0;
    out.w << 0, 0, 0, 1;
    return out;
  }
  double face = y2 < kHalfPi ? y2 : y2 - kPi;
  Vec xb(1), yf(1);
  xb << x1;
  yf << face;
  FiberSolution sol = fiber_solve(pm, pp, xb, yf);
  double u = sol.y(0);
  Vec h = pm.h(sol.y);
  Mat H = pm.hessian(sol.y);
  double G = -pm.F(sol.y) + x1 * u;
  out.x = V2(x1, e0 * h(1));
  out.y = V2(e1 * G + e0 * u, y2);
  out.v << 1, e1 * h(1) + e0 * H(0, 1) / H(0, 0), e2 * G + 2 * e1 * u + e0 / H(0, 0), 0;
  out.w << 0, e0 * (H(1, 1) - H(0, 1) * H(0, 1) / H(0, 0)), -e1 * h(1) - e0 * H(0, 1) / H(0, 0), 1;
  return out;
}

V4 map_tangent(const TorusAffineMap& m, const V4& v) {
  M2 B = to_m2(m.base), T = to_m2(m.T);
  V4 out;
  out.head<2>() = B * v.head<2>();
  out.tail<2>() = T * v.tail<2>();
  return out;
}

// Largest lambda with the trimmed pants inside a fraction of the ball and
// the fibres at r' inside the tube around each leg.
struct VertexFit {
  std::vector<V2> unit_pants;  // x_loc at lambda = 1
};

const std::vector<V2>& unit_pants_samples() {
  static const std::vector<V2> pts = [] {
    std::vector<V2> out;
    PantsMap pm(1, 1.0);
    sample_pants(pm, 24, 48, [&](int, int, int, int, const KiteSample& s) { out.push_back(s.x); });
    return out;
  }();
  return pts;
}

double leg_param(const GluingSchedule& s, std::size_t v, int leg, double LegSchedule::*field) {
  for (const auto& l : s.legs)
    if (l.vertex == v && l.leg == leg) return l.*field;
  return kInf;
}

bool pants_inside(const VertexSchedule& vs, const GluingSchedule& s, double lambda, double LegSchedule::*trim,
                  double fraction) {
  Local loc = make_local(vs.frame);
  double limit[3];
  for (int j = 0; j < 3; ++j) limit[j] = leg_param(s, vs.vertex, j, trim);
  for (const V2& p : unit_pants_samples()) {
    V2 x = lambda * p;
    bool kept = true;
    for (int j = 0; j < 3; ++j)
      if (leg_coordinate(j, x) > limit[j]) kept = false;
    if (kept && (loc.A_inv * x).norm() > fraction * vs.radius) return false;
  }
  return true;
}

bool tube_ok(const VertexSchedule& vs, const GluingSchedule& s, double lambda) {
  PantsMap pm(1, lambda);
  ProjectionPair pp = project(1, {1}, 0);
  for (int j = 0; j < 3; ++j) {
    double r1 = leg_param(s, vs.vertex, j, &LegSchedule::r1);
    if (!std::isfinite(r1)) continue;
    for (int i = 0; i < 32; ++i) {
      double y2 = (i + 0.5) * kPi / 32;
      Vec xb(1), yf(1);
      xb << r1;
      yf << (y2 < kHalfPi ? y2 : y2 - kPi);
      try {
        FiberSolution sol = fiber_solve(pm, pp, xb, yf);
        Vec h = pm.h(sol.y);
        if (std::abs(h(1)) > 0.5 * r1) return false;
      } catch (const Error&) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::size_t> component_roots(const PlaneCurve& c) {
  std::vector<std::size_t> parent(c.vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& e : c.edges)
    if (e.is_bounded()) parent[find(static_cast<std::size_t>(e.tail))] = find(static_cast<std::size_t>(e.head));
  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < parent.size(); ++i)
    if (find(i) == i) roots.push_back(i);
  return roots;
}

}  // namespace

// ---------------------------------------------------------------- fibres

Eigen::Vector2d EdgeFiber::point(double phi, long long sheet, double shift) const {
  V2 d = to_v2(direction);
  double level = theta + shift + static_cast<double>(sheet) * kPi / static_cast<double>(weight);
  return reduce(level * d / d.squaredNorm() + phi * to_v2(tangent));
}

double EdgeFiber::distance(const Eigen::Vector2d& y, double shift) const {
  V2 d = to_v2(direction);
  double period = kPi / static_cast<double>(weight);
  double v = d.dot(y) - theta - shift;
  v -= period * std::floor(v / period + 0.5);
  return std::abs(v) / d.norm();
}

double PLVertexPiece::distance(const Eigen::Vector2d& y) const {
  std::vector<V2> plus, minus;
  for (const auto& p : dual_polygon) {
    plus.push_back(kHalfPi * to_v2(p));
    minus.push_back(-kHalfPi * to_v2(p));
  }
  return std::min(torus_polygon_distance(y, plus), torus_polygon_distance(y, minus));
}

double PLEdgePiece::shift_at(double s) const {
  if (winding == 0 || !(twist_hi > twist_lo)) return 0.0;
  double beta = 1.0 - cutoff().value((s - twist_lo) / (twist_hi - twist_lo));
  return static_cast<double>(winding) * kPi * beta;
}

// ---------------------------------------------------------------- PL lift

CurveTopology curve_topology(const PlaneCurve& c) {
  CurveTopology t;
  auto stars = vertex_stars(c);
  for (const auto& s : stars) {
    long long a = twice_area(s.regions);
    t.vertex_area.push_back(a);
    t.euler -= static_cast<int>(a);
  }
  t.components = static_cast<int>(component_roots(c).size());
  for (const auto& e : c.edges) {
    if (e.is_ray()) t.punctures += static_cast<int>(e.weight);
    if (e.is_line()) {
      t.punctures += 2 * static_cast<int>(e.weight);
      t.components += static_cast<int>(e.weight);
    }
  }
  return t;
}

PLLift pl_lift(const PlaneCurve& c) {
  if (!balancing_check(c)) throw InputError("curve is not balanced");
  PLLift out;
  out.ambient_dim = 2;
  out.curve = c;
  auto stars = vertex_stars(c);
  std::vector<std::optional<double>> theta(c.edges.size());
  for (const auto& s : stars) {
    PLVertexPiece vp;
    vp.vertex = s.vertex;
    vp.center = to_v2(c.vertices[s.vertex]);
    vp.dual_polygon = s.regions;
    vp.area = twice_area(s.regions);
    out.vertex_pieces.push_back(vp);
    for (std::size_t i = 0; i < s.edges.size(); ++i)
      if (!theta[s.edges[i]]) theta[s.edges[i]] = kHalfPi * to_v2(s.dirs[i]).dot(to_v2(s.regions[i]));
  }
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    PLEdgePiece ep;
    ep.edge = i;
    ep.base = edge_base(c, e);
    ep.direction = to_v2(e.direction);
    ep.fiber.direction = e.direction;
    ep.fiber.tangent = rot(e.direction);
    ep.fiber.weight = e.weight;
    if (theta[i]) {
      ep.fiber.theta = *theta[i];
    } else if (e.dual && c.subdivision) {
      auto pts = c.subdivision->cell_vertices(*e.dual);
      ep.fiber.theta = kHalfPi * to_v2(e.direction).dot(to_v2(pts.front()));
    }
    if (e.is_bounded()) {
      ep.s_min = 0;
      ep.s_max = edge_length_param(c, e);
    } else if (e.is_ray()) {
      ep.s_min = 0;
      ep.s_max = kInf;
    } else {
      ep.s_min = -kInf;
      ep.s_max = kInf;
    }
    out.edge_pieces.push_back(ep);
  }
  CurveTopology t = curve_topology(c);
  out.euler = t.euler;
  out.punctures = t.punctures;
  out.components = t.components;
  out.genus = (2 * t.components - t.euler - t.punctures) / 2;
  return out;
}

PLLift pl_lift(const TropicalComplex& x) {
  if (!x.subdivision) throw InputError("tropical complex carries no duality data");
  PLLift out;
  if (x.ambient_dim == 2) {
    out = pl_lift(plane_curve(x));
  }
  out.ambient_dim = x.ambient_dim;
  for (std::size_t i = 0; i < x.cells.size(); ++i) {
    const auto& cell = x.cells[i];
    if (cell.dim < 1 && x.ambient_dim > 2) continue;
    PLCellPiece p;
    p.cell = cell.dual;
    p.base = cell;
    p.fiber = cell_coamoeba(x.subdivision->cell_vertices(cell.dual));
    out.pieces.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------- cutoff

namespace {

double bump(double s) { return (s <= 0 || s >= 1) ? 0.0 : std::exp(-1.0 / (s * (1 - s))); }
double bump_d(double s) {
  if (s <= 0 || s >= 1) return 0.0;
  double q = s * (1 - s);
  return bump(s) * (1 - 2 * s) / (q * q);
}

constexpr int kCutoffNodes = 1000;

}  // namespace

Cutoff::Cutoff() {
  table_.assign(kCutoffNodes + 1, 0.0);
  const int sub = 16;
  for (int i = 0; i < kCutoffNodes; ++i) {
    double a = static_cast<double>(i) / kCutoffNodes, h = 1.0 / kCutoffNodes / sub;
    double acc = 0;
    for (int k = 0; k < sub; ++k) {
      double l = a + k * h;
      acc += h / 6 * (bump(l) + 4 * bump(l + h / 2) + bump(l + h));
    }
    table_[static_cast<std::size_t>(i) + 1] = table_[static_cast<std::size_t>(i)] + acc;
  }
  norm_ = table_.back();
}

double Cutoff::value(double s) const {
  if (s <= 0) return 1.0;
  if (s >= 1) return 0.0;
  double pos = s * kCutoffNodes;
  int i = std::min(static_cast<int>(pos), kCutoffNodes - 1);
  double u = pos - i, h = 1.0 / kCutoffNodes;
  double a = i * h;
  double p0 = table_[static_cast<std::size_t>(i)], p1 = table_[static_cast<std::size_t>(i) + 1];
  double m0 = bump(a) * h, m1 = bump(a + h) * h;
  double u2 = u * u, u3 = u2 * u;
  double integral = (2 * u3 - 3 * u2 + 1) * p0 + (u3 - 2 * u2 + u) * m0 + (-2 * u3 + 3 * u2) * p1 + (u3 - u2) * m1;
  return 1.0 - integral / norm_;
}

double Cutoff::d1(double s) const { return -bump(s) / norm_; }
double Cutoff::d2(double s) const { return -bump_d(s) / norm_; }

const Cutoff& cutoff() {
  static const Cutoff c;
  return c;
}

// ---------------------------------------------------------------- schedule

const LegSchedule* GluingSchedule::leg(std::size_t vertex, std::size_t edge) const {
  for (const auto& l : legs)
    if (l.vertex == vertex && l.edge == edge) return &l;
  return nullptr;
}

GluingSchedule default_schedule(const PlaneCurve& c) {
  if (!is_smooth(c)) throw InputError("smoothing needs a smooth curve");
  GluingSchedule s;
  auto stars = vertex_stars(c);
  double diameter = 0;
  for (std::size_t a = 0; a < c.vertices.size(); ++a)
    for (std::size_t b = a + 1; b < c.vertices.size(); ++b)
      diameter = std::max(diameter, (to_v2(c.vertices[a]) - to_v2(c.vertices[b])).norm());
  s.truncation = 3.0 * std::max(diameter, 1.0);

  for (const auto& star : stars) {
    VertexSchedule vs;
    vs.vertex = star.vertex;
    vs.star = star;
    vs.frame = vertex_frame(c, star);
    double nearest = kInf;
    V2 cv = to_v2(c.vertices[star.vertex]);
    for (std::size_t b = 0; b < c.vertices.size(); ++b)
      if (b != star.vertex) nearest = std::min(nearest, (to_v2(c.vertices[b]) - cv).norm());
    vs.radius = std::isfinite(nearest) ? 0.45 * nearest : 1.0;
    for (int pos = 0; pos < 3; ++pos) {
      std::size_t gi = vs.frame.order[static_cast<std::size_t>(pos)];
      LegSchedule l;
      l.vertex = star.vertex;
      l.edge = star.edges[gi];
      l.leg = pos;
      l.k = pos == 0 ? 1 : 0;
      l.direction = star.dirs[gi];
      double unit = vs.radius / to_v2(l.direction).norm();
      l.r1 = 0.5 * unit;
      l.r2 = 0.65 * unit;
      l.r3 = 0.8 * unit;
      l.r4 = 0.95 * unit;
      s.legs.push_back(l);
    }
    s.vertices.push_back(vs);
  }

  for (auto& vs : s.vertices) {
    auto ok = [&](double lam) {
      return pants_inside(vs, s, lam, &LegSchedule::r1, 0.9) && tube_ok(vs, s, lam);
    };
    double lo = 0.0, hi = 4.0 * vs.radius;
    if (ok(hi)) {
      lo = hi;
    } else {
      for (int it = 0; it < 40; ++it) {
        double mid = 0.5 * (lo + hi);
        (ok(mid) ? lo : hi) = mid;
      }
    }
    if (!(lo > 0)) throw ConfigError("no admissible scale for the pants at a vertex");
    vs.lambda = lo;
  }

  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    EdgeSchedule es;
    es.edge = i;
    double unit = s.truncation / to_v2(e.direction).norm();
    if (e.is_bounded()) {
      double len = edge_length_param(c, e);
      const LegSchedule* a = s.leg(static_cast<std::size_t>(e.tail), i);
      const LegSchedule* b = s.leg(static_cast<std::size_t>(e.head), i);
      es.rho_lo = a->r4;
      es.rho_hi = len - b->r4;
      es.ext_lo = a->r3;
      es.ext_hi = len - b->r3;
    } else if (e.is_ray()) {
      const LegSchedule* a = s.leg(static_cast<std::size_t>(e.tail), i);
      es.rho_lo = a->r4;
      es.ext_lo = a->r3;
      es.rho_hi = es.ext_hi = unit;
    } else {
      es.rho_lo = es.ext_lo = -unit;
      es.rho_hi = es.ext_hi = unit;
    }
    s.edges.push_back(es);
  }
  return s;
}

void validate(const GluingSchedule& s, const PlaneCurve& c, double t) {
  if (!(t > 0 && t <= 1)) throw ConfigError("scale t must lie in (0, 1]");
  if (s.vertices.size() != c.vertices.size()) throw ConfigError("schedule does not match the curve");
  for (const auto& l : s.legs)
    if (!(0 < l.r1 && l.r1 < l.r2 && l.r2 < l.r3 && l.r3 < l.r4))
      throw ConfigError("leg parameters must satisfy 0 < r' < r'' < rbar < r");
  for (const auto& a : s.vertices) {
    if (!(a.radius > 0) || !(a.lambda > 0)) throw ConfigError("vertex radius and scale must be positive");
    for (const auto& l : s.legs)
      if (l.vertex == a.vertex && l.r4 * to_v2(l.direction).norm() >= a.radius)
        throw ConfigError("collar leaves the vertex ball");
    for (const auto& b : s.vertices) {
      if (b.vertex <= a.vertex) continue;
      double d = (to_v2(c.vertices[a.vertex]) - to_v2(c.vertices[b.vertex])).norm();
      if (d <= a.radius + b.radius) throw ConfigError("vertex balls overlap");
    }
    if (!pants_inside(a, s, a.lambda * t, &LegSchedule::r2, 1.0))
      throw ConfigError("trimmed pants leave the vertex ball");
    if (!tube_ok(a, s, a.lambda * t)) throw ConfigError("pants fibres at r' leave the leg tube");
  }
  for (const auto& e : s.edges)
    if (!(e.rho_lo < e.rho_hi) || !(e.ext_lo <= e.rho_lo && e.rho_hi <= e.ext_hi))
      throw ConfigError("flat segment of an edge is empty");
}

// ---------------------------------------------------------------- smooth lift

std::size_t LagrangianMesh::count(PieceKind k) const {
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [&](const MeshPoint& p) { return p.kind == k; }));
}

namespace {

void write_vertex(std::ostream& os, const MeshPoint& p, ProjectionMode mode) {
  os << p.x(0) << ' ' << p.x(1) << ' ' << (mode == ProjectionMode::x1_x2_y1 ? p.y(0) : p.y(1)) << '\n';
}

// Quads whose corners wrap around the torus are dropped from the drawings.
bool drawable(const LagrangianMesh& m, const std::array<std::size_t, 4>& q) {
  for (int i = 0; i < 4; ++i) {
    const auto& a = m.points[q[static_cast<std::size_t>(i)]];
    const auto& b = m.points[q[static_cast<std::size_t>((i + 1) % 4)]];
    if ((a.y - b.y).cwiseAbs().maxCoeff() > kHalfPi) return false;
  }
  return true;
}

}  // namespace

void LagrangianMesh::write_off(std::ostream& os, ProjectionMode mode) const {
  std::vector<std::array<std::size_t, 4>> faces;
  for (const auto& q : quads)
    if (drawable(*this, q)) faces.push_back(q);
  os << "OFF\n" << points.size() << ' ' << faces.size() << " 0\n";
  for (const auto& p : points) write_vertex(os, p, mode);
  for (const auto& q : faces) os << "4 " << q[0] << ' ' << q[1] << ' ' << q[2] << ' ' << q[3] << '\n';
}

void LagrangianMesh::write_obj(std::ostream& os, ProjectionMode mode) const {
  for (const auto& p : points) {
    os << "v ";
    write_vertex(os, p, mode);
  }
  for (const auto& q : quads)
    if (drawable(*this, q)) os << "f " << q[0] + 1 << ' ' << q[1] + 1 << ' ' << q[2] + 1 << ' ' << q[3] + 1 << '\n';
}

long long TwistData::total() const {
  long long n = 0;
  for (const auto& [e, w] : winding) n += w;
  return n;
}

LagrangianMesh smooth_lift(const PlaneCurve& c, double t, const GluingSchedule& sched, int resolution,
                           const TwistData* twist_data) {
  if (resolution < 4) throw ConfigError("resolution must be at least 4");
  if (!is_smooth(c)) throw InputError("smoothing needs a smooth curve");
  validate(sched, c, t);
  LagrangianMesh mesh;
  mesh.scale = t;
  mesh.truncation = sched.truncation;
  const int n_tau = resolution / 2, n_phi = resolution;
  const ProjectionPair pp = project(1, {1}, 0);

  for (const auto& vs : sched.vertices) {
    Local loc = make_local(vs.frame);
    PantsMap pm(1, vs.lambda * t);
    double trim[3];
    for (int j = 0; j < 3; ++j) trim[j] = leg_param(sched, vs.vertex, j, &LegSchedule::r2);

    // Pants body, one grid per kite and half.
    std::vector<long long> index;
    std::size_t grid_rows = static_cast<std::size_t>(n_tau + 1), grid_cols = static_cast<std::size_t>(n_phi);
    int current = -1;
    auto flush = [&]() {
      for (std::size_t i = 0; i + 1 < grid_rows; ++i)
        for (std::size_t j = 0; j + 1 < grid_cols; ++j) {
          long long a = index[i * grid_cols + j], b = index[(i + 1) * grid_cols + j],
                    cc = index[(i + 1) * grid_cols + j + 1], d = index[i * grid_cols + j + 1];
          if (a >= 0 && b >= 0 && cc >= 0 && d >= 0)
            mesh.quads.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b),
                                  static_cast<std::size_t>(cc), static_cast<std::size_t>(d)});
        }
    };
    sample_pants(pm, n_tau, n_phi, [&](int k, int sign, int i, int j, const KiteSample& s) {
      int grid = 2 * k + (sign > 0 ? 0 : 1);
      if (grid != current) {
        if (current >= 0) flush();
        index.assign(grid_rows * grid_cols, -1);
        current = grid;
      }
      for (int l = 0; l < 3; ++l)
        if (leg_coordinate(l, s.x) > trim[l]) return;
      MeshPoint p;
      p.x = loc.x(s.x);
      p.y = reduce(loc.y(s.y));
      p.v = loc.tangent(s.v);
      p.w = loc.tangent(s.w);
      p.kind = PieceKind::pants;
      p.vertex = static_cast<int>(vs.vertex);
      p.analytic = s.analytic;
      index[static_cast<std::size_t>(i) * grid_cols + static_cast<std::size_t>(j)] =
          static_cast<long long>(mesh.points.size());
      mesh.points.push_back(p);
    });
    flush();

    // Collars over the three legs.
    for (const auto& leg : sched.legs) {
      if (leg.vertex != vs.vertex) continue;
      TorusAffineMap S = leg_symmetry(leg.leg);
      M2 B = to_m2(S.base), T = to_m2(S.T);
      V2 shift = kHalfPi * to_v2(S.shift);
      std::size_t start = mesh.points.size();
      int nx = resolution;
      for (int i = 0; i < nx; ++i) {
        double x1 = leg.r1 + (leg.r4 - leg.r1) * i / (nx - 1);
        for (int j = 0; j < n_phi; ++j) {
          double y2 = (j + 0.5) * kPi / n_phi;
          CollarSample cs = collar_sample(pm, pp, leg, x1, y2);
          MeshPoint p;
          p.x = loc.x(B * cs.x);
          p.y = reduce(loc.y(T * cs.y + shift));
          p.v = loc.tangent(map_tangent(S, cs.v));
          p.w = loc.tangent(map_tangent(S, cs.w));
          p.kind = PieceKind::collar;
          p.vertex = static_cast<int>(vs.vertex);
          p.edge = static_cast<int>(leg.edge);
          mesh.points.push_back(p);
        }
      }
      for (int i = 0; i + 1 < nx; ++i)
        for (int j = 0; j < n_phi; ++j) {
          std::size_t jn = static_cast<std::size_t>((j + 1) % n_phi);
          std::size_t r0 = start + static_cast<std::size_t>(i * n_phi), r1 = r0 + static_cast<std::size_t>(n_phi);
          mesh.quads.push_back({r0 + static_cast<std::size_t>(j), r1 + static_cast<std::size_t>(j), r1 + jn, r0 + jn});
        }
    }
  }

  // Flat cylinders over the edges.
  PLLift pl = pl_lift(c);
  double spacing = kPi / resolution;
  for (const auto& es : sched.edges) {
    const auto& ep = pl.edge_pieces[es.edge];
    double dn = ep.direction.norm();
    int ns = std::max(2, static_cast<int>(std::ceil((es.rho_hi - es.rho_lo) * dn / spacing)) + 1);
    for (long long sheet = 0; sheet < ep.fiber.weight; ++sheet) {
      std::size_t start = mesh.points.size();
      for (int i = 0; i < ns; ++i) {
        double s = es.rho_lo + (es.rho_hi - es.rho_lo) * i / (ns - 1);
        for (int j = 0; j < n_phi; ++j) {
          double phi = (j + 0.5) * kPi / n_phi;
          MeshPoint p;
          p.x = ep.base + s * ep.direction;
          p.y = ep.fiber.point(phi, sheet);
          p.v << ep.direction, 0, 0;
          p.w << 0, 0, to_v2(ep.fiber.tangent);
          p.kind = PieceKind::cylinder;
          p.edge = static_cast<int>(es.edge);
          mesh.points.push_back(p);
        }
      }
      for (int i = 0; i + 1 < ns; ++i)
        for (int j = 0; j < n_phi; ++j) {
          std::size_t jn = static_cast<std::size_t>((j + 1) % n_phi);
          std::size_t r0 = start + static_cast<std::size_t>(i * n_phi), r1 = r0 + static_cast<std::size_t>(n_phi);
          mesh.quads.push_back({r0 + static_cast<std::size_t>(j), r1 + static_cast<std::size_t>(j), r1 + jn, r0 + jn});
        }
    }
  }

  if (twist_data) twist(mesh, *twist_data, sched, c);
  return mesh;
}

double symplectic_residual(const LagrangianMesh& m, PieceKind kind) {
  double worst = 0;
  for (const auto& p : m.points) {
    if (p.kind != kind) continue;
    V4 v = p.v.normalized(), w = p.w.normalized();
    double om = (v(0) * w(2) - v(2) * w(0) + v(1) * w(3) - v(3) * w(1)) / kPi;
    worst = std::max(worst, std::abs(om));
  }
  return worst;
}

double symplectic_residual(const LagrangianMesh& m) {
  return std::max({symplectic_residual(m, PieceKind::pants), symplectic_residual(m, PieceKind::collar),
                   symplectic_residual(m, PieceKind::cylinder)});
}

// ---------------------------------------------------------------- Hausdorff

namespace {

namespace bg = boost::geometry;
namespace bgi = boost::geometry::index;
using P4 = bg::model::point<double, 4, bg::cs::cartesian>;

constexpr double kWrapMargin = 1.0;

P4 make_p4(double a, double b, double c, double d) {
  P4 p;
  bg::set<0>(p, a);
  bg::set<1>(p, b);
  bg::set<2>(p, c);
  bg::set<3>(p, d);
  return p;
}

// Nearest neighbour in R^2 x (R / pi Z)^2, by replicating points near the
// edges of the fundamental domain.
class PeriodicCloud {
 public:
  explicit PeriodicCloud(const std::vector<std::pair<V2, V2>>& pts) {
    std::vector<P4> all;
    all.reserve(pts.size() * 2);
    for (const auto& [x, y0] : pts) {
      V2 y = reduce(y0);
      for (int a = -1; a <= 1; ++a)
        for (int b = -1; b <= 1; ++b) {
          V2 yy = y + kPi * V2(a, b);
          if (yy(0) < -kWrapMargin || yy(0) > kPi + kWrapMargin || yy(1) < -kWrapMargin || yy(1) > kPi + kWrapMargin)
            continue;
          all.push_back(make_p4(x(0), x(1), yy(0), yy(1)));
        }
    }
    tree_ = bgi::rtree<P4, bgi::rstar<16>>(all.begin(), all.end());
  }

  double distance(const V2& x, const V2& y0) const {
    V2 y = reduce(y0);
    P4 q = make_p4(x(0), x(1), y(0), y(1));
    std::vector<P4> hit;
    tree_.query(bgi::nearest(q, 1), std::back_inserter(hit));
    if (hit.empty()) return kInf;
    return bg::distance(q, hit.front());
  }

 private:
  bgi::rtree<P4, bgi::rstar<16>> tree_;
};

double distance_to_pl(const PLLift& pl, const V2& x, const V2& y, double truncation) {
  double best = kInf;
  for (const auto& vp : pl.vertex_pieces) {
    double dx = (x - vp.center).norm();
    if (dx >= best) continue;
    best = std::min(best, std::hypot(dx, vp.distance(y)));
  }
  for (const auto& ep : pl.edge_pieces) {
    double d2 = ep.direction.squaredNorm();
    double limit = truncation / std::sqrt(d2);
    double lo = std::max(ep.s_min, -limit), hi = std::min(ep.s_max, limit);
    double s = std::clamp((x - ep.base).dot(ep.direction) / d2, lo, hi);
    double dx = (x - ep.base - s * ep.direction).norm();
    if (dx >= best) continue;
    best = std::min(best, std::hypot(dx, ep.fiber.distance(y, ep.shift_at(s))));
  }
  return best;
}

std::vector<std::pair<V2, V2>> sample_pl(const PLLift& pl, double spacing, double truncation) {
  std::vector<std::pair<V2, V2>> out;
  for (const auto& vp : pl.vertex_pieces) {
    for (int sign : {1, -1}) {
      std::vector<V2> poly;
      for (const auto& p : vp.dual_polygon) poly.push_back(sign * kHalfPi * to_v2(p));
      V2 lo = poly[0], hi = poly[0];
      for (const auto& p : poly) {
        lo = lo.cwiseMin(p);
        hi = hi.cwiseMax(p);
      }
      for (double a = lo(0); a <= hi(0) + 1e-12; a += spacing)
        for (double b = lo(1); b <= hi(1) + 1e-12; b += spacing) {
          V2 y(a, b);
          if (polygon_distance(y, poly) <= 1e-12) out.emplace_back(vp.center, y);
        }
      for (std::size_t i = 0; i < poly.size(); ++i) {
        const V2& a = poly[i];
        const V2& b = poly[(i + 1) % poly.size()];
        int n = std::max(1, static_cast<int>(std::ceil((b - a).norm() / spacing)));
        for (int k = 0; k < n; ++k) out.emplace_back(vp.center, a + (b - a) * (static_cast<double>(k) / n));
      }
    }
  }
  for (const auto& ep : pl.edge_pieces) {
    double dn = ep.direction.norm();
    double limit = truncation / dn;
    double lo = std::max(ep.s_min, -limit), hi = std::min(ep.s_max, limit);
    int ns = std::max(2, static_cast<int>(std::ceil((hi - lo) * dn / spacing)) + 1);
    double circle = kPi * to_v2(ep.fiber.tangent).norm();
    int nphi = std::max(8, static_cast<int>(std::ceil(circle / spacing)));
    for (long long sheet = 0; sheet < ep.fiber.weight; ++sheet)
      for (int i = 0; i < ns; ++i) {
        double s = lo + (hi - lo) * i / (ns - 1);
        for (int j = 0; j < nphi; ++j)
          out.emplace_back(ep.base + s * ep.direction, ep.fiber.point(kPi * j / nphi, sheet, ep.shift_at(s)));
      }
  }
  return out;
}

}  // namespace

double hausdorff_distance(const LagrangianMesh& m, const PLLift& pl, int resolution) {
  double forward = 0;
  std::vector<std::pair<V2, V2>> mesh_pts;
  mesh_pts.reserve(m.points.size());
  for (const auto& p : m.points) {
    forward = std::max(forward, distance_to_pl(pl, p.x, p.y, m.truncation));
    mesh_pts.emplace_back(p.x, p.y);
  }
  PeriodicCloud cloud(mesh_pts);
  double backward = 0;
  for (const auto& [x, y] : sample_pl(pl, kPi / resolution, m.truncation))
    backward = std::max(backward, cloud.distance(x, y));
  return std::max(forward, backward);
}

double hausdorff_distance(const LagrangianMesh& a, const LagrangianMesh& b) {
  auto pts = [](const LagrangianMesh& m) {
    std::vector<std::pair<V2, V2>> out;
    for (const auto& p : m.points) out.emplace_back(p.x, p.y);
    return out;
  };
  auto pa = pts(a), pb = pts(b);
  PeriodicCloud ca(pa), cb(pb);
  double d = 0;
  for (const auto& [x, y] : pa) d = std::max(d, cb.distance(x, y));
  for (const auto& [x, y] : pb) d = std::max(d, ca.distance(x, y));
  return d;
}

// ---------------------------------------------------------------- twist

long long twist(PLLift& pl, const TwistData& sigma, const GluingSchedule& sched) {
  for (const auto& [edge, n] : sigma.winding) {
    if (edge >= pl.edge_pieces.size() || edge >= sched.edges.size()) throw InputError("twist names an unknown edge");
    auto& ep = pl.edge_pieces[edge];
    ep.winding = n;
    ep.twist_lo = sched.edges[edge].rho_lo;
    ep.twist_hi = sched.edges[edge].rho_hi;
  }
  pl.twist_class = sigma.total();
  return pl.twist_class;
}

long long twist(LagrangianMesh& m, const TwistData& sigma, const GluingSchedule& sched, const PlaneCurve& c) {
  for (const auto& [edge, n] : sigma.winding)
    if (edge >= c.edges.size() || edge >= sched.edges.size()) throw InputError("twist names an unknown edge");
  for (auto& p : m.points) {
    if (p.kind != PieceKind::cylinder) continue;
    auto it = sigma.winding.find(static_cast<std::size_t>(p.edge));
    if (it == sigma.winding.end() || it->second == 0) continue;
    const auto& e = c.edges[static_cast<std::size_t>(p.edge)];
    const auto& es = sched.edges[static_cast<std::size_t>(p.edge)];
    V2 d = to_v2(e.direction);
    double s = (p.x - edge_base(c, e)).dot(d) / d.squaredNorm();
    double width = es.rho_hi - es.rho_lo;
    double u = (s - es.rho_lo) / width;
    double beta = 1.0 - cutoff().value(u);
    double dbeta = -cutoff().d1(u) / width;
    double n = static_cast<double>(it->second);
    p.y = reduce(p.y + n * kPi * beta * d / d.squaredNorm());
    p.v.tail<2>() += n * kPi * dbeta * d / d.squaredNorm();
  }
  return sigma.total();
}

// ---------------------------------------------------------------- exactness

ExactnessReport exactness_check(const PlaneCurve& c) {
  ExactnessReport r;
  for (const auto& e : c.edges) {
    QPoint base = e.is_line() ? e.base : c.vertices[static_cast<std::size_t>(e.tail)];
    QPoint normal = to_q(rot(e.direction));
    Rational cf = dot(normal, base);
    if (cf != 0) r.exact = false;
    r.constants.push_back(cf);
  }
  return r;
}

}  // namespace lagpants
