#include "lagpants/polyhedral.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "lagpants/errors.hpp"

namespace lagpants {

namespace {

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    if (k == 0) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

QMatrix differences(const std::vector<QPoint>& pts, const std::vector<std::size_t>& idx) {
  QMatrix m;
  for (std::size_t i = 1; i < idx.size(); ++i) m.push_back(sub(pts[idx[i]], pts[idx[0]]));
  return m;
}

QMatrix differences(const std::vector<QPoint>& pts) {
  QMatrix m;
  for (std::size_t i = 1; i < pts.size(); ++i) m.push_back(sub(pts[i], pts[0]));
  return m;
}

// Scale (normal, offset) so the normal is a primitive integer vector.
HalfSpace normalize(const QPoint& normal, const Rational& offset) {
  IPoint p = primitive(normal);
  QPoint q = to_q(p);
  Rational factor = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (normal[i] != 0) {
      factor = q[i] / normal[i];
      break;
    }
  return {q, offset * factor};
}

bool same_halfspace(const HalfSpace& a, const HalfSpace& b) {
  return a.normal == b.normal && a.offset == b.offset;
}

std::vector<std::size_t> on_hyperplane(const std::vector<QPoint>& pts,
                                       const std::vector<std::size_t>& idx, const HalfSpace& h) {
  std::vector<std::size_t> out;
  for (std::size_t i : idx)
    if (dot(h.normal, pts[i]) == h.offset) out.push_back(i);
  return out;
}

int affine_dim_of(const std::vector<QPoint>& pts, const std::vector<std::size_t>& idx) {
  if (idx.empty()) return -1;
  return rank(differences(pts, idx));
}

// Facets of conv(pts[idx]) as point index sets.
std::vector<std::vector<std::size_t>> facets_of(const std::vector<QPoint>& pts,
                                                const std::vector<std::size_t>& idx) {
  std::vector<QPoint> sub_pts;
  for (std::size_t i : idx) sub_pts.push_back(pts[i]);
  HRep h = convex_hull(sub_pts);
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : h.inequalities) out.push_back(on_hyperplane(pts, idx, f));
  return out;
}

void collect_faces(const std::vector<QPoint>& pts, const std::vector<std::size_t>& idx,
                   std::set<std::vector<std::size_t>>& seen) {
  if (!seen.insert(idx).second) return;
  if (affine_dim_of(pts, idx) <= 0) return;
  for (auto& f : facets_of(pts, idx)) collect_faces(pts, f, seen);
}

}  // namespace

bool Lattice::is_unimodular(const IMatrix& basis) {
  if (basis.empty() || basis.size() != basis[0].size()) return false;
  long long d = det(basis);
  return d == 1 || d == -1;
}

bool HRep::contains(const QPoint& x) const {
  for (const auto& e : equations)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& h : inequalities)
    if (dot(h.normal, x) < h.offset) return false;
  return true;
}

bool HRep::in_relative_interior(const QPoint& x) const {
  for (const auto& e : equations)
    if (dot(e.normal, x) != e.offset) return false;
  for (const auto& h : inequalities)
    if (dot(h.normal, x) <= h.offset) return false;
  return true;
}

int affine_dimension(const std::vector<QPoint>& pts) {
  if (pts.empty()) return -1;
  return rank(differences(pts));
}

HRep convex_hull(const std::vector<QPoint>& pts) {
  if (pts.empty()) throw InputError("convex hull of an empty set");
  std::size_t d = pts[0].size();
  HRep out;
  QMatrix diffs = differences(pts);
  std::vector<QPoint> normals = diffs.empty() ? std::vector<QPoint>{} : nullspace(diffs, d);
  if (diffs.empty())
    for (std::size_t i = 0; i < d; ++i) {
      QPoint e(d, Rational(0));
      e[i] = 1;
      normals.push_back(e);
    }
  for (const auto& nrm : normals) {
    HalfSpace h = normalize(nrm, dot(nrm, pts[0]));
    out.equations.push_back(h);
  }
  int k = static_cast<int>(d) - static_cast<int>(normals.size());
  if (k <= 0) return out;

  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) all[i] = i;
  for_each_subset(pts.size(), static_cast<std::size_t>(k), [&](const std::vector<std::size_t>& s) {
    QMatrix rows = differences(pts, s);
    if (rank(rows) != k - 1) return;
    for (const auto& nrm : normals) rows.push_back(nrm);
    std::vector<QPoint> ns = nullspace(rows, d);
    if (ns.size() != 1) return;
    QPoint nrm = ns[0];
    Rational off = dot(nrm, pts[s[0]]);
    bool pos = false, neg = false;
    for (const auto& p : pts) {
      Rational v = dot(nrm, p) - off;
      if (v > 0) pos = true;
      if (v < 0) neg = true;
    }
    if (pos && neg) return;
    if (neg) {
      for (auto& x : nrm) x = -x;
      off = -off;
    }
    HalfSpace h = normalize(nrm, off);
    for (const auto& existing : out.inequalities)
      if (same_halfspace(existing, h)) return;
    out.inequalities.push_back(h);
  });
  return out;
}

std::vector<std::size_t> extreme_points(const std::vector<QPoint>& pts) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<QPoint> others;
    bool duplicate = false;
    for (std::size_t j = 0; j < pts.size(); ++j) {
      if (j == i) continue;
      if (pts[j] == pts[i]) {
        if (j < i) duplicate = true;
        continue;
      }
      others.push_back(pts[j]);
    }
    if (duplicate) continue;
    if (others.empty() || !convex_hull(others).contains(pts[i])) out.push_back(i);
  }
  return out;
}

int LatticePolytope::dim() const { return affine_dimension([this] {
  std::vector<QPoint> q;
  for (const auto& v : vertices) q.push_back(to_q(v));
  return q;
}()); }

LatticePolytope LatticePolytope::from_points(const std::vector<IPoint>& pts) {
  if (pts.empty()) throw InputError("polytope needs at least one point");
  std::size_t d = pts[0].size();
  if (d < 1 || d > 3) throw InputError("polytopes are supported in dimension 1 to 3");
  std::vector<QPoint> q;
  for (const auto& p : pts) {
    if (p.size() != d) throw InputError("points of mixed dimension");
    q.push_back(to_q(p));
  }
  LatticePolytope out;
  for (std::size_t i : extreme_points(q)) out.vertices.push_back(pts[i]);
  std::sort(out.vertices.begin(), out.vertices.end());
  HRep h = convex_hull(q);
  IPoint lo = pts[0], hi = pts[0];
  for (const auto& p : pts)
    for (std::size_t i = 0; i < d; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  IPoint cur = lo;
  while (true) {
    if (h.contains(to_q(cur))) out.lattice_points.push_back(cur);
    std::size_t i = 0;
    while (i < d && cur[i] == hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == d) break;
    ++cur[i];
  }
  std::sort(out.lattice_points.begin(), out.lattice_points.end());
  return out;
}

long long LiftingFunction::at(const IPoint& p) const {
  auto it = values.find(p);
  if (it == values.end()) {
    std::ostringstream os;
    os << "missing lifting value at (";
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << ")";
    throw InputError(os.str());
  }
  return it->second;
}

std::vector<std::size_t> Subdivision::top_cells() const {
  std::vector<std::size_t> out;
  if (cells.empty()) return out;
  int top = cells[0].dim;
  for (std::size_t i = 0; i < cells.size(); ++i)
    if (cells[i].dim == top) out.push_back(i);
  return out;
}

bool Subdivision::precedes(std::size_t i, std::size_t j) const {
  const auto& a = cells[i].points;
  const auto& b = cells[j].points;
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<IPoint> Subdivision::cell_vertices(std::size_t i) const {
  std::vector<IPoint> out;
  for (std::size_t v : cells[i].vertices) out.push_back(polytope.lattice_points[v]);
  return out;
}

Subdivision regular_subdivision(const LatticePolytope& p, const LiftingFunction& nu) {
  const auto& lp = p.lattice_points;
  if (lp.empty()) throw InputError("polytope has no lattice points");
  std::vector<QPoint> pts;
  std::vector<Rational> lift;
  for (const auto& v : lp) {
    pts.push_back(to_q(v));
    lift.emplace_back(nu.at(v));
  }
  int k = affine_dimension(pts);
  if (k <= 0) throw DegeneracyError("polytope is a single point");

  // Coordinates on the affine hull of P: the pivot columns of the difference matrix.
  QMatrix diffs = differences(pts);
  QMatrix reduced = diffs;
  std::vector<int> cols = row_reduce(reduced);
  auto project = [&](const QPoint& x) {
    QPoint out;
    for (int c : cols) out.push_back(x[c]);
    return out;
  };
  std::vector<QPoint> proj;
  for (const auto& x : pts) proj.push_back(project(x));

  std::set<std::vector<std::size_t>> tops;
  for_each_subset(pts.size(), static_cast<std::size_t>(k + 1), [&](const std::vector<std::size_t>& s) {
    QMatrix a;
    QPoint b;
    for (std::size_t i : s) {
      QPoint row = proj[i];
      row.emplace_back(1);
      a.push_back(row);
      b.push_back(lift[i]);
    }
    auto sol = solve_unique(a, b);
    if (!sol) return;
    std::vector<std::size_t> cell;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      QPoint row = proj[i];
      row.emplace_back(1);
      Rational val = dot(row, *sol);
      if (lift[i] < val) return;
      if (lift[i] == val) cell.push_back(i);
    }
    tops.insert(cell);
  });

  std::set<std::vector<std::size_t>> faces;
  for (const auto& t : tops) collect_faces(pts, t, faces);

  Subdivision out;
  out.polytope = p;
  out.lifting = nu;
  for (const auto& f : faces) {
    SubdivisionCell c;
    c.points = f;
    c.dim = affine_dim_of(pts, f);
    std::vector<QPoint> fp;
    for (std::size_t i : f) fp.push_back(pts[i]);
    for (std::size_t e : extreme_points(fp)) c.vertices.push_back(f[e]);
    out.cells.push_back(c);
  }
  std::stable_sort(out.cells.begin(), out.cells.end(),
                   [](const SubdivisionCell& a, const SubdivisionCell& b) {
                     if (a.dim != b.dim) return a.dim > b.dim;
                     return a.points < b.points;
                   });
  return out;
}

Integer normalized_volume(const std::vector<IPoint>& simplex) {
  if (simplex.size() <= 1) return 1;
  std::size_t k = simplex.size() - 1;
  std::size_t d = simplex[0].size();
  IMatrix w;  // k rows of edge vectors
  for (std::size_t i = 1; i < simplex.size(); ++i) {
    IPoint e(d);
    for (std::size_t j = 0; j < d; ++j) e[j] = simplex[i][j] - simplex[0][j];
    w.push_back(e);
  }
  Integer g = 0;
  for_each_subset(d, k, [&](const std::vector<std::size_t>& c) {
    IMatrix minor(k, IPoint(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = w[i][c[j]];
    long long m = det(minor);
    g = boost::multiprecision::gcd(g, Integer(m < 0 ? -m : m));
  });
  return g;
}

bool is_unimodal(const Subdivision& s) {
  for (std::size_t t : s.top_cells()) {
    const auto& c = s.cells[t];
    if (c.vertices.size() != static_cast<std::size_t>(c.dim + 1)) return false;
    if (normalized_volume(s.cell_vertices(t)) != 1) return false;
  }
  return true;
}

Rational PiecewiseAffine::operator()(const QPoint& m) const {
  if (pieces.empty()) throw InputError("empty piecewise affine function");
  Rational best = 0;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    Rational v = dot(to_q(pieces[i].slope), m) + pieces[i].constant;
    if (i == 0 || v < best) best = v;
  }
  return best;
}

std::vector<std::size_t> PiecewiseAffine::argmin(const QPoint& m) const {
  Rational best = (*this)(m);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (dot(to_q(pieces[i].slope), m) + pieces[i].constant == best) out.push_back(i);
  return out;
}

DualCell polyhedron_vrep(const std::vector<HalfSpace>& equations,
                         const std::vector<HalfSpace>& inequalities, std::size_t dim) {
  DualCell out;
  QMatrix all;
  for (const auto& e : equations) all.push_back(e.normal);
  for (const auto& h : inequalities) all.push_back(h.normal);
  std::vector<QPoint> lineality =
      all.empty() ? std::vector<QPoint>{} : nullspace(all, dim);
  if (all.empty())
    for (std::size_t i = 0; i < dim; ++i) {
      QPoint e(dim, Rational(0));
      e[i] = 1;
      lineality.push_back(e);
    }

  QMatrix eq_rows;
  QPoint eq_rhs;
  for (const auto& e : equations) {
    eq_rows.push_back(e.normal);
    eq_rhs.push_back(e.offset);
  }
  for (const auto& l : lineality) {
    eq_rows.push_back(l);
    eq_rhs.emplace_back(0);
  }
  int r = eq_rows.empty() ? 0 : rank(eq_rows);
  std::size_t free = dim - static_cast<std::size_t>(r);

  auto feasible = [&](const QPoint& x) {
    for (const auto& h : inequalities)
      if (dot(h.normal, x) < h.offset) return false;
    return true;
  };

  for_each_subset(inequalities.size(), free, [&](const std::vector<std::size_t>& s) {
    QMatrix a = eq_rows;
    QPoint b = eq_rhs;
    for (std::size_t i : s) {
      a.push_back(inequalities[i].normal);
      b.push_back(inequalities[i].offset);
    }
    if (a.empty()) return;
    if (rank(a) != static_cast<int>(dim)) return;
    auto x = solve_unique(a, b);
    if (!x || !feasible(*x)) return;
    if (std::find(out.vertices.begin(), out.vertices.end(), *x) == out.vertices.end())
      out.vertices.push_back(*x);
  });

  if (free >= 1) {
    for_each_subset(inequalities.size(), free - 1, [&](const std::vector<std::size_t>& s) {
      QMatrix a = eq_rows;
      for (std::size_t i : s) a.push_back(inequalities[i].normal);
      std::vector<QPoint> ns = a.empty() ? std::vector<QPoint>{} : nullspace(a, dim);
      if (ns.size() != 1) return;
      for (int sign : {1, -1}) {
        QPoint ray = scale(ns[0], Rational(sign));
        bool ok = true, strict = false;
        for (const auto& h : inequalities) {
          Rational v = dot(h.normal, ray);
          if (v < 0) ok = false;
          if (v > 0) strict = true;
        }
        if (!ok || !strict) continue;
        IPoint p = primitive(ray);
        if (std::find(out.rays.begin(), out.rays.end(), p) == out.rays.end()) out.rays.push_back(p);
      }
    });
  }
  for (const auto& l : lineality) {
    IPoint p = primitive(l);
    IPoint m = p;
    for (auto& x : m) x = -x;
    out.rays.push_back(p);
    out.rays.push_back(m);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  std::sort(out.rays.begin(), out.rays.end());

  if (out.vertices.empty()) {
    out.dim = -1;
    return out;
  }
  QMatrix span = differences(out.vertices);
  for (const auto& ray : out.rays) span.push_back(to_q(ray));
  out.dim = span.empty() ? 0 : rank(span);
  return out;
}

LegendreDual discrete_legendre(const Subdivision& s) {
  const auto& lp = s.polytope.lattice_points;
  std::size_t d = s.polytope.ambient_dim();
  LegendreDual out;
  std::set<std::size_t> used;
  for (const auto& c : s.cells)
    for (std::size_t v : c.vertices) used.insert(v);
  for (std::size_t v : used) out.nu_check.pieces.push_back({lp[v], Rational(s.lifting.at(lp[v]))});

  for (const auto& c : s.cells) {
    const IPoint& v0 = lp[c.vertices[0]];
    Rational nu0 = s.lifting.at(v0);
    std::vector<HalfSpace> eqs, ineqs;
    for (std::size_t i = 1; i < c.vertices.size(); ++i) {
      const IPoint& v = lp[c.vertices[i]];
      QPoint nrm(d);
      for (std::size_t j = 0; j < d; ++j) nrm[j] = v[j] - v0[j];
      eqs.push_back({nrm, nu0 - s.lifting.at(v)});
    }
    for (const auto& w : lp) {
      if (w == v0) continue;
      QPoint nrm(d);
      for (std::size_t j = 0; j < d; ++j) nrm[j] = w[j] - v0[j];
      ineqs.push_back({nrm, nu0 - s.lifting.at(w)});
    }
    out.dual.push_back(polyhedron_vrep(eqs, ineqs, d));
  }
  return out;
}

}  // namespace lagpants
