#include "lagpants/tropical.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "lagpants/errors.hpp"

namespace lagpants {

namespace {

IPoint rot(const IPoint& u) { return {-u[1], u[0]}; }

IPoint isub(const IPoint& a, const IPoint& b) {
  IPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IPoint iadd(const IPoint& a, const IPoint& b) {
  IPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IPoint ineg(const IPoint& a) {
  IPoint out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

long long det2(const IPoint& a, const IPoint& b) { return a[0] * b[1] - a[1] * b[0]; }

int find_vertex(const std::vector<QPoint>& vs, const QPoint& p) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    if (vs[i] == p) return static_cast<int>(i);
  return -1;
}

// Star of one vertex with regions labelled relative to regions[0] = 0.
VertexStar local_star(const PlaneCurve& c, std::size_t v) {
  VertexStar s;
  s.vertex = v;
  struct Item {
    IPoint dir;
    std::size_t edge;
    long long w;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    if (e.tail == static_cast<int>(v)) items.push_back({e.direction, i, e.weight});
    if (e.head == static_cast<int>(v)) items.push_back({ineg(e.direction), i, e.weight});
  }
  std::stable_sort(items.begin(), items.end(),
                   [](const Item& a, const Item& b) { return angle_less(a.dir, b.dir); });
  IPoint q{0, 0};
  for (const auto& it : items) {
    s.edges.push_back(it.edge);
    s.dirs.push_back(it.dir);
    s.weights.push_back(it.w);
    s.regions.push_back(q);
    IPoint r = rot(it.dir);
    q = {q[0] - it.w * r[0], q[1] - it.w * r[1]};
  }
  return s;
}

void shift(VertexStar& s, const IPoint& t) {
  for (auto& r : s.regions) r = iadd(r, t);
}

std::size_t position(const VertexStar& s, std::size_t edge, const IPoint& dir) {
  for (std::size_t i = 0; i < s.edges.size(); ++i)
    if (s.edges[i] == edge && s.dirs[i] == dir) return i;
  throw InputError("edge missing from vertex star");
}

}  // namespace

std::optional<std::size_t> TropicalComplex::cell_of_dual(std::size_t i) const {
  for (std::size_t j = 0; j < cells.size(); ++j)
    if (cells[j].dual == i) return j;
  return std::nullopt;
}

TropicalComplex tropical_hypersurface(const Subdivision& s) {
  LegendreDual ld = discrete_legendre(s);
  TropicalComplex x;
  x.ambient_dim = s.polytope.ambient_dim();
  x.subdivision = s;
  x.nu_check = ld.nu_check;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    const auto& c = s.cells[i];
    if (c.dim < 1) continue;
    TropicalCell t;
    t.dim = ld.dual[i].dim;
    t.vertices = ld.dual[i].vertices;
    t.rays = ld.dual[i].rays;
    t.dual = i;
    if (c.dim == 1) {
      auto vs = s.cell_vertices(i);
      t.weight = gcd_of(isub(vs[1], vs[0]));
    }
    x.cells.push_back(t);
  }
  std::stable_sort(x.cells.begin(), x.cells.end(),
                   [](const TropicalCell& a, const TropicalCell& b) { return a.dim > b.dim; });
  return x;
}

std::size_t PlaneCurve::bounded_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [](const CurveEdge& e) { return e.is_bounded(); }));
}

PlaneCurve plane_curve(const TropicalComplex& x) {
  if (x.ambient_dim != 2) throw InputError("plane curve requires ambient dimension 2");
  PlaneCurve c;
  c.subdivision = x.subdivision;
  for (const auto& cell : x.cells)
    if (cell.dim == 0) {
      c.vertices.push_back(cell.vertices.at(0));
      c.vertex_dual.push_back(cell.dual);
    }
  for (const auto& cell : x.cells) {
    if (cell.dim != 1) continue;
    CurveEdge e;
    e.weight = cell.weight;
    e.dual = cell.dual;
    if (cell.vertices.size() == 2) {
      e.tail = find_vertex(c.vertices, cell.vertices[0]);
      e.head = find_vertex(c.vertices, cell.vertices[1]);
      e.base = cell.vertices[0];
      e.direction = primitive(sub(cell.vertices[1], cell.vertices[0]));
    } else if (cell.vertices.size() == 1 && cell.rays.size() == 1) {
      e.tail = find_vertex(c.vertices, cell.vertices[0]);
      e.base = cell.vertices[0];
      e.direction = cell.rays[0];
    } else if (cell.vertices.size() == 1 && cell.rays.size() == 2) {
      e.base = cell.vertices[0];
      e.direction = cell.rays[1];
    } else {
      throw DegeneracyError("unexpected one-dimensional cell");
    }
    if ((e.is_bounded() || e.is_ray()) && (e.tail < 0 || (e.is_bounded() && e.head < 0)))
      throw DegeneracyError("edge endpoint is not a vertex of the curve");
    c.edges.push_back(e);
  }
  return c;
}

PlaneCurve make_curve(const std::vector<QPoint>& vertices, const std::vector<SegmentInput>& segments,
                      const std::vector<RayInput>& rays, const std::vector<LineInput>& lines) {
  PlaneCurve c;
  c.vertices = vertices;
  c.vertex_dual.assign(vertices.size(), std::nullopt);
  for (const auto& v : vertices)
    if (v.size() != 2) throw InputError("curve vertices must be points in the plane");
  for (const auto& s : segments) {
    if (s.tail >= vertices.size() || s.head >= vertices.size() || s.tail == s.head)
      throw InputError("segment refers to invalid vertices");
    if (s.weight < 1) throw InputError("weights must be positive");
    CurveEdge e;
    e.tail = static_cast<int>(s.tail);
    e.head = static_cast<int>(s.head);
    e.base = vertices[s.tail];
    e.direction = primitive(sub(vertices[s.head], vertices[s.tail]));
    e.weight = s.weight;
    c.edges.push_back(e);
  }
  for (const auto& r : rays) {
    if (r.vertex >= vertices.size()) throw InputError("ray refers to an invalid vertex");
    if (r.direction.size() != 2 || (r.direction[0] == 0 && r.direction[1] == 0))
      throw InputError("ray direction must be a nonzero plane vector");
    if (r.weight < 1) throw InputError("weights must be positive");
    CurveEdge e;
    e.tail = static_cast<int>(r.vertex);
    e.base = vertices[r.vertex];
    e.direction = primitive(r.direction);
    e.weight = r.weight;
    c.edges.push_back(e);
  }
  for (const auto& l : lines) {
    if (l.point.size() != 2 || l.direction.size() != 2 || (l.direction[0] == 0 && l.direction[1] == 0))
      throw InputError("malformed line");
    if (l.weight < 1) throw InputError("weights must be positive");
    CurveEdge e;
    e.base = l.point;
    e.direction = primitive(l.direction);
    e.weight = l.weight;
    c.edges.push_back(e);
  }
  return c;
}

std::vector<VertexStar> vertex_stars(const PlaneCurve& c) {
  std::vector<VertexStar> stars;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) stars.push_back(local_star(c, v));

  if (c.subdivision) {
    for (std::size_t v = 0; v < stars.size(); ++v) {
      if (!c.vertex_dual[v]) throw InputError("vertex without dual cell");
      auto poly = c.subdivision->cell_vertices(*c.vertex_dual[v]);
      IPoint lo_poly = *std::min_element(poly.begin(), poly.end());
      IPoint lo_star = *std::min_element(stars[v].regions.begin(), stars[v].regions.end());
      shift(stars[v], isub(lo_poly, lo_star));
    }
    return stars;
  }

  std::vector<bool> done(stars.size(), false);
  for (std::size_t root = 0; root < stars.size(); ++root) {
    if (done[root]) continue;
    done[root] = true;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t a = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < stars[a].edges.size(); ++i) {
        const auto& e = c.edges[stars[a].edges[i]];
        if (!e.is_bounded()) continue;
        std::size_t b = static_cast<std::size_t>(e.tail) == a ? static_cast<std::size_t>(e.head)
                                                               : static_cast<std::size_t>(e.tail);
        const IPoint& u = stars[a].dirs[i];
        const IPoint& left = stars[a].regions[(i + 1) % stars[a].regions.size()];
        std::size_t j = position(stars[b], stars[a].edges[i], ineg(u));
        if (!done[b]) {
          shift(stars[b], isub(left, stars[b].regions[j]));
          done[b] = true;
          queue.push_back(b);
        } else if (stars[b].regions[j] != left) {
          throw InputError("dual region labels are inconsistent; the curve is not balanced");
        }
      }
    }
  }
  return stars;
}

bool balancing_check(const PlaneCurve& c) {
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    long long sx = 0, sy = 0;
    for (const auto& e : c.edges) {
      if (e.tail == static_cast<int>(v)) {
        sx += e.weight * e.direction[0];
        sy += e.weight * e.direction[1];
      }
      if (e.head == static_cast<int>(v)) {
        sx -= e.weight * e.direction[0];
        sy -= e.weight * e.direction[1];
      }
    }
    if (sx != 0 || sy != 0) return false;
  }
  return true;
}

bool balancing_check(const TropicalComplex& x) {
  if (x.ambient_dim == 2) return balancing_check(plane_curve(x));
  if (!x.subdivision) throw InputError("balancing check needs a plane curve or a subdivision");
  // Around a codimension-two cell the weighted normals are the edges of the
  // dual 2-cell, so balancing amounts to that polygon closing up.
  const Subdivision& s = *x.subdivision;
  for (std::size_t i = 0; i < s.cells.size(); ++i) {
    if (s.cells[i].dim != 2) continue;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t j = 0; j < s.cells.size(); ++j)
      if (s.cells[j].dim == 1 && s.precedes(j, i))
        edges.emplace_back(s.cells[j].vertices[0], s.cells[j].vertices[1]);
    if (edges.empty()) return false;
    std::size_t start = edges[0].first, cur = edges[0].second;
    IPoint sum = isub(s.polytope.lattice_points[cur], s.polytope.lattice_points[start]);
    std::vector<bool> used(edges.size(), false);
    used[0] = true;
    while (cur != start) {
      bool moved = false;
      for (std::size_t k = 0; k < edges.size() && !moved; ++k) {
        if (used[k]) continue;
        std::size_t nxt;
        if (edges[k].first == cur) nxt = edges[k].second;
        else if (edges[k].second == cur) nxt = edges[k].first;
        else continue;
        used[k] = true;
        sum = iadd(sum, isub(s.polytope.lattice_points[nxt], s.polytope.lattice_points[cur]));
        cur = nxt;
        moved = true;
      }
      if (!moved) return false;
    }
    for (auto v : sum)
      if (v != 0) return false;
  }
  return true;
}

bool is_smooth(const PlaneCurve& c) {
  if (c.subdivision) return is_unimodal(*c.subdivision);
  for (const auto& e : c.edges)
    if (e.weight != 1) return false;
  for (std::size_t v = 0; v < c.vertices.size(); ++v) {
    VertexStar s = local_star(c, v);
    if (s.dirs.size() != 3) return false;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = i + 1; j < 3; ++j)
        if (std::llabs(det2(s.dirs[i], s.dirs[j])) != 1) return false;
  }
  return true;
}

bool is_smooth(const TropicalComplex& x) {
  if (x.subdivision) return is_unimodal(*x.subdivision);
  return is_smooth(plane_curve(x));
}

TropicalLine tangent_line(const PlaneCurve& c, std::size_t vertex) {
  if (vertex >= c.vertices.size()) throw InputError("vertex not found");
  VertexStar s = local_star(c, vertex);
  TropicalLine l;
  l.center = c.vertices[vertex];
  l.generators = s.dirs;
  l.weights = s.weights;
  l.edge_ids = s.edges;
  return l;
}

bool balancing_check(const TropicalLine& l) {
  if (l.generators.empty()) return false;
  IPoint sum(l.generators[0].size(), 0);
  for (std::size_t i = 0; i < l.generators.size(); ++i)
    for (std::size_t j = 0; j < sum.size(); ++j) sum[j] += l.weights[i] * l.generators[i][j];
  return std::all_of(sum.begin(), sum.end(), [](long long v) { return v == 0; });
}

bool revlex_less(const IPoint& a, const IPoint& b) {
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

QPoint AffineFrame::to_local(const QPoint& x) const { return lagpants::apply(A, sub(x, origin)); }

QPoint AffineFrame::from_local(const QPoint& x_loc) const { return add(origin, lagpants::apply(A_inv, x_loc)); }

IPoint AffineFrame::direction_to_local(const IPoint& u) const { return lagpants::apply(A, u); }

AffineFrame adapted_frame(const TropicalLine& l) {
  std::size_t k = l.generators.size();
  if (k < 2) throw InputError("tropical line needs at least two generators");
  std::size_t d = l.generators[0].size();
  if (k != d + 1) throw DegeneracyError("tropical line must have ambient dimension + 1 generators");
  for (auto w : l.weights)
    if (w != 1) throw DegeneracyError("weighted line is not smooth; use the covering model");
  for (std::size_t skip = 0; skip < k; ++skip) {
    IMatrix m;
    for (std::size_t j = 0; j < k; ++j)
      if (j != skip) m.push_back(l.generators[j]);
    long long dt = det(m);
    if (dt != 1 && dt != -1) throw DegeneracyError("line is not smooth; use the covering model");
  }

  AffineFrame f;
  f.order.resize(k);
  std::iota(f.order.begin(), f.order.end(), 0);
  std::stable_sort(f.order.begin(), f.order.end(), [&](std::size_t a, std::size_t b) {
    return revlex_less(l.generators[a], l.generators[b]);
  });
  auto columns = [&] {
    IMatrix m(d, IPoint(d));
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t i = 0; i < d; ++i) m[i][j] = l.generators[f.order[j + 1]][i];
    return m;
  };
  IMatrix m = columns();
  if (det(m) < 0) {
    if (d < 2) {
      // In dimension one the orientation is forced by u1.
    } else {
      std::swap(f.order[1], f.order[2]);
      m = columns();
    }
  }
  f.origin = l.center;
  f.A_inv = m;
  f.A = inverse_unimodular(m);
  f.torus_origin = IPoint(d, 0);
  return f;
}

AffineFrame vertex_frame(const PlaneCurve& c, const VertexStar& star) {
  TropicalLine l = tangent_line(c, star.vertex);
  AffineFrame f = adapted_frame(l);
  // l.generators follow the star order, so order[1] indexes the star directly.
  std::size_t i1 = f.order[1];
  f.torus_origin = star.regions[(i1 + 1) % star.regions.size()];
  return f;
}

}  // namespace lagpants
