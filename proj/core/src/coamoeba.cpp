#include "lagpants/coamoeba.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lagpants/errors.hpp"

namespace lagpants {

namespace {

double wrap(double v, double lo) { return v - kPi * std::floor((v - lo) / kPi); }

Vec to_vec(const IPoint& p) {
  Vec v(static_cast<Eigen::Index>(p.size()));
  for (std::size_t i = 0; i < p.size(); ++i) v(static_cast<Eigen::Index>(i)) = static_cast<double>(p[i]);
  return v;
}

Mat to_mat(const IMatrix& m) {
  Mat out(static_cast<Eigen::Index>(m.size()), static_cast<Eigen::Index>(m.empty() ? 0 : m[0].size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j)
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m[i][j]);
  return out;
}

// Classify z against the closed standard simplex scaled by pi/2.
Membership simplex_class(const Coamoeba& c, const Vec& z, double eps, CoamoebaClass interior) {
  Vec ext = c.extended(z);
  Membership m;
  std::vector<int> zero;
  for (int j = 0; j < ext.size(); ++j) {
    if (ext(j) < -eps) return m;
    if (ext(j) <= eps) zero.push_back(j);
  }
  if (zero.empty()) {
    m.kind = interior;
  } else if (static_cast<int>(zero.size()) == c.n + 1) {
    m.kind = CoamoebaClass::vertex;
    std::vector<bool> in(static_cast<std::size_t>(c.n + 2), false);
    for (int j : zero) in[static_cast<std::size_t>(j)] = true;
    for (int k = 0; k < c.n + 2; ++k)
      if (!in[static_cast<std::size_t>(k)]) m.vertex = k;
  } else {
    m.kind = CoamoebaClass::face;
    m.face = zero;
  }
  return m;
}

Membership simplex_class_exact(int n, const QPoint& z, CoamoebaClass interior) {
  Membership m;
  QPoint ext;
  Rational s = 0;
  for (const auto& v : z) s += v;
  ext.push_back(Rational(1, 2) - s);
  for (const auto& v : z) ext.push_back(v);
  std::vector<int> zero;
  for (std::size_t j = 0; j < ext.size(); ++j) {
    if (ext[j] < 0) return m;
    if (ext[j] == 0) zero.push_back(static_cast<int>(j));
  }
  if (zero.empty()) {
    m.kind = interior;
  } else if (static_cast<int>(zero.size()) == n + 1) {
    m.kind = CoamoebaClass::vertex;
    std::vector<bool> in(static_cast<std::size_t>(n + 2), false);
    for (int j : zero) in[static_cast<std::size_t>(j)] = true;
    for (int k = 0; k < n + 2; ++k)
      if (!in[static_cast<std::size_t>(k)]) m.vertex = k;
  } else {
    m.kind = CoamoebaClass::face;
    m.face = zero;
  }
  return m;
}

Rational floor_q(const Rational& q) {
  Integer num = boost::multiprecision::numerator(q);
  Integer den = boost::multiprecision::denominator(q);
  Integer f = num / den;
  if (num % den != 0 && num < 0) f -= 1;
  return Rational(f);
}

}  // namespace

Vec FlatTorus::reduce(const Vec& y) const {
  Vec out = y;
  for (int i = 0; i < out.size(); ++i) {
    out(i) = wrap(out(i), 0.0);
    if (out(i) >= kPi) out(i) -= kPi;
  }
  return out;
}

Vec FlatTorus::difference(const Vec& a, const Vec& b) const {
  Vec d = a - b;
  for (int i = 0; i < d.size(); ++i) d(i) = wrap(d(i), -kHalfPi);
  return d;
}

double FlatTorus::distance(const Vec& a, const Vec& b) const { return difference(a, b).norm(); }

Vec Coamoeba::vertex(int k) const {
  if (k < 0 || k > n + 1) throw InputError("vertex index out of range");
  Vec p = Vec::Zero(n + 1);
  if (k > 0) p(k - 1) = kHalfPi;
  return p;
}

Vec Coamoeba::extended(const Vec& y) const {
  Vec e(y.size() + 1);
  e(0) = kHalfPi - y.sum();
  e.tail(y.size()) = y;
  return e;
}

Coamoeba standard_coamoeba(int n) {
  if (n < 0) throw InputError("dimension must be non-negative");
  Coamoeba c;
  c.n = n;
  c.torus.dim = n + 1;
  return c;
}

Membership membership(const Coamoeba& c, const Vec& y, double eps) {
  if (y.size() != c.n + 1) throw InputError("point has the wrong dimension");
  if (c.n == 0) {
    Membership m;
    Vec z(1);
    z(0) = wrap(y(0), -kPi / 4);
    // The circle is covered; the two vertices 0 and pi/2 separate the halves.
    if (std::abs(z(0)) <= eps) {
      m.kind = CoamoebaClass::vertex;
      m.vertex = 0;
    } else if (std::abs(z(0) - kHalfPi) <= eps) {
      m.kind = CoamoebaClass::vertex;
      m.vertex = 1;
    } else {
      m.kind = z(0) < kHalfPi ? CoamoebaClass::interior_plus : CoamoebaClass::interior_minus;
    }
    return m;
  }
  Vec plus(y.size()), minus(y.size());
  for (int i = 0; i < y.size(); ++i) {
    plus(i) = wrap(y(i), -kPi / 4);
    minus(i) = -wrap(y(i), -3 * kPi / 4);
  }
  Membership m = simplex_class(c, plus, eps, CoamoebaClass::interior_plus);
  if (m.kind != CoamoebaClass::outside) return m;
  return simplex_class(c, minus, eps, CoamoebaClass::interior_minus);
}

Membership membership_exact(const Coamoeba& c, const QPoint& q) {
  if (static_cast<int>(q.size()) != c.n + 1) throw InputError("point has the wrong dimension");
  QPoint plus, minus;
  for (const auto& v : q) {
    plus.push_back(v - floor_q(v + Rational(1, 4)));
    Rational r = v - floor_q(v + Rational(3, 4));
    minus.push_back(-r);
  }
  if (c.n == 0) {
    Membership m;
    if (plus[0] == 0) {
      m.kind = CoamoebaClass::vertex;
      m.vertex = 0;
    } else if (plus[0] == Rational(1, 2)) {
      m.kind = CoamoebaClass::vertex;
      m.vertex = 1;
    } else {
      m.kind = plus[0] < Rational(1, 2) ? CoamoebaClass::interior_plus : CoamoebaClass::interior_minus;
    }
    return m;
  }
  Membership m = simplex_class_exact(c.n, plus, CoamoebaClass::interior_plus);
  if (m.kind != CoamoebaClass::outside) return m;
  return simplex_class_exact(c.n, minus, CoamoebaClass::interior_minus);
}

bool in_coamoeba(const Coamoeba& c, const Vec& y, double eps) {
  Membership m = membership(c, y, eps);
  return m.kind != CoamoebaClass::outside && m.kind != CoamoebaClass::face;
}

Vec TorusAffineMap::apply(const Vec& y) const { return to_mat(T) * y + kHalfPi * to_vec(shift); }

Vec TorusAffineMap::apply_base(const Vec& x) const { return to_mat(base) * x; }

TorusAffineMap symmetry(int n, int k) {
  if (k < 1 || k > n + 1) throw InputError("symmetry index out of range");
  std::size_t d = static_cast<std::size_t>(n + 1);
  std::size_t kk = static_cast<std::size_t>(k - 1);
  IMatrix rstar(d, IPoint(d, 0));
  for (std::size_t i = 0; i < d; ++i) {
    if (i == kk) {
      rstar[i][kk] = -1;
    } else {
      rstar[i][i] = 1;
      rstar[i][kk] = -1;
    }
  }
  TorusAffineMap m;
  m.base = rstar;
  m.T = transpose(rstar);
  m.shift = IPoint(d, 0);
  m.shift[kk] = 1;
  return m;
}

TorusAffineMap permutation_symmetry(int n, const std::vector<int>& perm) {
  std::size_t d = static_cast<std::size_t>(n + 1);
  if (perm.size() != d + 1) throw InputError("permutation has the wrong length");
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<int>(i)) throw InputError("not a permutation");
  auto e = [&](int j) {
    IPoint v(d, 0);
    if (j > 0) v[static_cast<std::size_t>(j - 1)] = 1;
    return v;
  };
  IPoint e0 = e(perm[0]);
  TorusAffineMap m;
  m.T.assign(d, IPoint(d, 0));
  for (std::size_t j = 1; j <= d; ++j) {
    IPoint col = e(perm[j]);
    for (std::size_t i = 0; i < d; ++i) m.T[i][j - 1] = col[i] - e0[i];
  }
  m.shift = e0;
  m.base = inverse_unimodular(transpose(m.T));
  return m;
}

Vec BlowupChart::to_torus(const Vec& alpha, double t) const {
  if (alpha.size() != n) throw InputError("chart point has the wrong dimension");
  Vec y(n + 1);
  int j = 0;
  for (int i = 0; i <= n; ++i) y(i) = (i == axis) ? t : t * alpha(j++);
  if (vertex == 0) return y;
  return symmetry(n, vertex).apply(y);
}

std::pair<Vec, double> BlowupChart::from_torus(const Vec& y) const {
  Vec yc = vertex == 0 ? y : symmetry(n, vertex).apply(y);
  FlatTorus torus{n + 1};
  yc = torus.difference(yc, Vec::Zero(n + 1));
  double t = yc(axis);
  if (t == 0.0) throw DomainError("axis coordinate vanishes; point is not in this chart");
  Vec alpha(n);
  int j = 0;
  for (int i = 0; i <= n; ++i)
    if (i != axis) alpha(j++) = yc(i) / t;
  return {alpha, t};
}

BlowupChart blowup_chart(const Coamoeba& c, int k, int axis) {
  if (k < 0 || k > c.n + 1) throw InputError("vertex index out of range");
  BlowupChart b;
  b.n = c.n;
  b.vertex = k;
  b.axis = axis < 0 ? c.n : axis;
  if (b.axis > c.n) throw InputError("chart axis out of range");
  b.half_width = 0.3 * kHalfPi;
  return b;
}

namespace {

struct DoubleHull {
  std::vector<std::pair<Vec, double>> eqs, ineqs;
};

DoubleHull hull_to_double(const HRep& h) {
  DoubleHull d;
  auto conv = [](const HalfSpace& s) {
    Vec nrm(static_cast<Eigen::Index>(s.normal.size()));
    for (std::size_t i = 0; i < s.normal.size(); ++i)
      nrm(static_cast<Eigen::Index>(i)) = lagpants::to_double(s.normal[i]);
    double scale = nrm.norm();
    return std::make_pair(Vec(nrm / scale), lagpants::to_double(s.offset) / scale);
  };
  for (const auto& e : h.equations) d.eqs.push_back(conv(e));
  for (const auto& e : h.inequalities) d.ineqs.push_back(conv(e));
  return d;
}

// Calls fn(z - 2k) for integer k bringing z near the bounding box of the cell.
template <class Fn>
bool any_translate(const Vec& z, const std::vector<IPoint>& verts, double eps, Fn fn) {
  int d = static_cast<int>(z.size());
  std::vector<long long> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) {
    double mn = 1e300, mx = -1e300;
    for (const auto& v : verts) {
      mn = std::min(mn, static_cast<double>(v[static_cast<std::size_t>(i)]));
      mx = std::max(mx, static_cast<double>(v[static_cast<std::size_t>(i)]));
    }
    lo[static_cast<std::size_t>(i)] = static_cast<long long>(std::ceil((z(i) - mx - eps) / 2));
    hi[static_cast<std::size_t>(i)] = static_cast<long long>(std::floor((z(i) - mn + eps) / 2));
    if (lo[static_cast<std::size_t>(i)] > hi[static_cast<std::size_t>(i)]) return false;
  }
  std::vector<long long> k = lo;
  while (true) {
    Vec w = z;
    for (int i = 0; i < d; ++i) w(i) -= 2.0 * static_cast<double>(k[static_cast<std::size_t>(i)]);
    if (fn(w)) return true;
    int i = 0;
    while (i < d && k[static_cast<std::size_t>(i)] == hi[static_cast<std::size_t>(i)]) {
      k[static_cast<std::size_t>(i)] = lo[static_cast<std::size_t>(i)];
      ++i;
    }
    if (i == d) return false;
    ++k[static_cast<std::size_t>(i)];
  }
}

}  // namespace

bool CellCoamoeba::contains_closed(const Vec& y, double eps) const {
  DoubleHull h = hull_to_double(hull);
  auto inside = [&](const Vec& w) {
    for (const auto& [nrm, off] : h.eqs)
      if (std::abs(nrm.dot(w) - off) > eps) return false;
    for (const auto& [nrm, off] : h.ineqs)
      if (nrm.dot(w) - off < -eps) return false;
    return true;
  };
  Vec z = y / kHalfPi;
  return any_translate(z, vertices, eps, inside) || any_translate(Vec(-z), vertices, eps, inside);
}

bool CellCoamoeba::contains(const Vec& y, double eps) const {
  DoubleHull h = hull_to_double(hull);
  auto inside = [&](const Vec& w) {
    for (const auto& v : vertices)
      if ((w - to_vec(v)).norm() <= eps) return true;
    for (const auto& [nrm, off] : h.eqs)
      if (std::abs(nrm.dot(w) - off) > eps) return false;
    for (const auto& [nrm, off] : h.ineqs)
      if (nrm.dot(w) - off <= eps) return false;
    return true;
  };
  Vec z = y / kHalfPi;
  return any_translate(z, vertices, eps, inside) || any_translate(Vec(-z), vertices, eps, inside);
}

CellCoamoeba cell_coamoeba(const std::vector<IPoint>& vertices) {
  if (vertices.size() < 2) throw InputError("cell coamoebas need a cell of dimension at least one");
  std::vector<QPoint> q;
  for (const auto& v : vertices) q.push_back(to_q(v));
  CellCoamoeba c;
  c.dim = affine_dimension(q);
  if (c.dim < 1) throw InputError("cell coamoebas need a cell of dimension at least one");
  for (std::size_t i : extreme_points(q)) c.vertices.push_back(vertices[i]);
  c.hull = convex_hull(q);
  return c;
}

Vec CoveringModel::beta(const Vec& y) const { return to_mat(B).transpose() * y; }

Vec CoveringModel::base_from_standard(const Vec& x_std) const { return to_mat(B) * x_std; }

CoveringModel covering_coamoeba(const TropicalLine& l) {
  if (l.generators.size() != 3 || l.generators[0].size() != 2)
    throw InputError("covering model needs a trivalent plane vertex");
  if (!balancing_check(l)) throw InputError("vertex is not balanced");
  // Same ordering rule as adapted_frame, applied to weighted generators.
  std::vector<std::size_t> order{0, 1, 2};
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return revlex_less(l.generators[a], l.generators[b]);
  });
  auto wu = [&](std::size_t i) {
    IPoint v = l.generators[i];
    for (auto& x : v) x *= l.weights[i];
    return v;
  };
  IPoint a = wu(order[1]), b = wu(order[2]);
  if (a[0] * b[1] - a[1] * b[0] < 0) std::swap(order[1], order[2]);
  a = wu(order[1]);
  b = wu(order[2]);
  CoveringModel m;
  m.B = {{a[0], b[0]}, {a[1], b[1]}};
  long long dt = det(m.B);
  if (dt == 0) throw DegeneracyError("vertex generators are parallel");
  m.degree = std::llabs(dt);

  // Over the leg of standard direction u the fibre is the circle of direction
  // rot(u); its preimage splits into degree / k circles, k the order of
  // B^{-T} rot(u) modulo Z^2.
  QMatrix binvt;
  {
    QMatrix bt{{Rational(a[0]), Rational(a[1])}, {Rational(b[0]), Rational(b[1])}};
    Rational d = det(bt);
    binvt = {{bt[1][1] / d, -bt[0][1] / d}, {-bt[1][0] / d, bt[0][0] / d}};
  }
  std::vector<IPoint> std_legs{{-1, -1}, {1, 0}, {0, 1}};
  m.punctures = 0;
  for (const auto& u : std_legs) {
    QPoint c{Rational(-u[1]), Rational(u[0])};
    QPoint v{binvt[0][0] * c[0] + binvt[0][1] * c[1], binvt[1][0] * c[0] + binvt[1][1] * c[1]};
    Integer k = 1;
    for (const auto& x : v) {
      Integer den = boost::multiprecision::denominator(x);
      k = k / boost::multiprecision::gcd(k, den) * den;
    }
    long long comps = m.degree / static_cast<long long>(k);
    m.leg_components.push_back(comps);
    m.punctures += static_cast<int>(comps);
  }
  m.euler = -static_cast<int>(m.degree);
  m.genus = (2 - m.euler - m.punctures) / 2;
  return m;
}

namespace {

const double kFourDirs[4][2] = {{1, 1}, {-1, 1}, {-1, -1}, {1, -1}};

// Odd cell containing y in (s, d) = (y1 + y2, y2 - y1) units of pi/2, or none.
bool four_valent_cell(const Vec& y, double eps, int& sign) {
  double s = (y(0) + y(1)) / kHalfPi;
  double d = (y(1) - y(0)) / kHalfPi;
  for (long long i = static_cast<long long>(std::floor(s)); i <= static_cast<long long>(std::ceil(s)); ++i)
    for (long long j = static_cast<long long>(std::floor(d)); j <= static_cast<long long>(std::ceil(d)); ++j) {
      if (((i + j) % 2 + 2) % 2 != 1) continue;
      if (std::abs(s - static_cast<double>(i)) <= 0.5 + eps && std::abs(d - static_cast<double>(j)) <= 0.5 + eps) {
        sign = (i % 2 != 0) ? 1 : -1;
        return true;
      }
    }
  return false;
}

}  // namespace

bool in_four_valent_coamoeba(const Vec& y, double eps) {
  if (y.size() != 2) throw InputError("four-valent model lives in dimension two");
  int sign = 0;
  return four_valent_cell(y, eps, sign);
}

double four_valent_potential(const Vec& y) {
  if (y.size() != 2) throw InputError("four-valent model lives in dimension two");
  int sign = 0;
  if (!four_valent_cell(y, 1e-12, sign)) throw DomainError("point is outside the four-valent coamoeba");
  double prod = 1.0;
  for (const auto& u : kFourDirs) prod *= std::abs(std::sin(u[0] * y(0) + u[1] * y(1) - kPi / 4));
  return sign * std::sqrt(prod);
}

Vec four_valent_gradient(const Vec& y) {
  double f = four_valent_potential(y);
  Vec g = Vec::Zero(2);
  if (f == 0.0) return g;
  for (const auto& u : kFourDirs) {
    double a = u[0] * y(0) + u[1] * y(1) - kPi / 4;
    double c = std::cos(a) / std::sin(a);
    g(0) += 0.5 * c * u[0];
    g(1) += 0.5 * c * u[1];
  }
  return f * g;
}

}  // namespace lagpants
