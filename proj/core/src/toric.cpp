#include "lagpants/toric.hpp"

#include <algorithm>
#include <cstdlib>

#include "lagpants/errors.hpp"
#include "lagpants/lift.hpp"

namespace lagpants {

namespace {

IPoint rot(const IPoint& d) { return {-d[1], d[0]}; }

long long det2(const IPoint& a, const IPoint& b) { return a[0] * b[1] - a[1] * b[0]; }

PolygonEdge make_edge(const QPoint& base, const IPoint& tangent, std::optional<QPoint> start,
                      std::optional<QPoint> end) {
  PolygonEdge e;
  e.base = base;
  e.start = std::move(start);
  e.tangent = tangent;
  e.normal = rot(tangent);
  e.offset = dot(to_q(e.normal), base);
  e.end = std::move(end);
  return e;
}

Rational edge_param(const PolygonEdge& e, const QPoint& x) {
  // Position of x along the edge in units of the primitive tangent.
  QPoint d = sub(x, e.base);
  return e.tangent[0] != 0 ? d[0] / Rational(e.tangent[0]) : d[1] / Rational(e.tangent[1]);
}

bool on_edge(const PolygonEdge& e, const QPoint& x) {
  if (dot(to_q(e.normal), x) != e.offset) return false;
  Rational s = edge_param(e, x);
  if (e.start && s < edge_param(e, *e.start)) return false;
  if (e.end && s > edge_param(e, *e.end)) return false;
  return true;
}

void check_vertices(const std::vector<QPoint>& v) {
  for (const auto& p : v)
    if (p.size() != 2) throw InputError("polygon vertices must be planar");
}

}  // namespace

DelzantPolygon DelzantPolygon::from_vertices(const std::vector<QPoint>& vertices) {
  check_vertices(vertices);
  if (vertices.size() < 3) throw InputError("a bounded polygon needs at least three vertices");
  DelzantPolygon p;
  p.vertices = vertices;
  p.closed = true;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const QPoint& a = vertices[i];
    const QPoint& b = vertices[(i + 1) % vertices.size()];
    p.edges.push_back(make_edge(a, primitive(sub(b, a)), a, b));
  }
  for (const auto& e : p.edges)
    for (const auto& v : vertices)
      if (dot(to_q(e.normal), v) < e.offset) throw InputError("polygon vertices must be convex and counterclockwise");
  return p;
}

DelzantPolygon DelzantPolygon::from_chain(const IPoint& incoming, const std::vector<QPoint>& vertices,
                                          const IPoint& outgoing) {
  check_vertices(vertices);
  if (vertices.empty()) throw InputError("an unbounded polygon needs a vertex");
  DelzantPolygon p;
  p.vertices = vertices;
  p.closed = false;
  IPoint in = primitive(incoming);
  // Arriving ray, parametrized from far away towards the first vertex.
  p.edges.push_back(make_edge(vertices.front(), {-in[0], -in[1]}, std::nullopt, vertices.front()));
  for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
    p.edges.push_back(
        make_edge(vertices[i], primitive(sub(vertices[i + 1], vertices[i])), vertices[i], vertices[i + 1]));
  p.edges.push_back(make_edge(vertices.back(), primitive(outgoing), vertices.back(), std::nullopt));
  for (const auto& e : p.edges)
    for (const auto& v : vertices)
      if (dot(to_q(e.normal), v) < e.offset) throw InputError("polygon chain must be convex and counterclockwise");
  return p;
}

bool DelzantPolygon::contains(const QPoint& x) const {
  for (const auto& e : edges)
    if (dot(to_q(e.normal), x) < e.offset) return false;
  return true;
}

bool DelzantPolygon::on_boundary(const QPoint& x) const {
  if (!contains(x)) return false;
  for (const auto& e : edges)
    if (dot(to_q(e.normal), x) == e.offset) return true;
  return false;
}

std::pair<std::size_t, std::size_t> DelzantPolygon::corner(std::size_t i) const {
  if (i >= vertices.size()) throw InputError("polygon vertex out of range");
  if (closed) return {(i + vertices.size() - 1) % vertices.size(), i};
  return {i, i + 1};
}

bool delzant_vertex_check(const DelzantPolygon& poly, std::size_t vertex) {
  auto [a, b] = poly.corner(vertex);
  return std::llabs(det2(poly.edges[a].tangent, poly.edges[b].tangent)) == 1;
}

bool delzant_check(const DelzantPolygon& poly) {
  if (poly.edges.size() < 2) return false;
  for (std::size_t i = 0; i < poly.vertices.size(); ++i)
    if (!delzant_vertex_check(poly, i)) return false;
  return true;
}

std::vector<BoundaryHit> classify_boundary(const PlaneCurve& c, const DelzantPolygon& poly) {
  for (const auto& v : c.vertices) {
    if (!poly.contains(v)) throw InputError("curve vertex outside the polygon");
    if (poly.on_boundary(v)) throw InputError("curve vertex on the boundary of the polygon");
  }
  std::vector<BoundaryHit> hits;
  auto shoot = [&](std::size_t edge, const QPoint& from, const IPoint& u, long long weight) {
    std::optional<Rational> best;
    for (const auto& e : poly.edges) {
      Rational nu = dot(to_q(e.normal), to_q(u));
      if (nu >= 0) continue;
      Rational s = (e.offset - dot(to_q(e.normal), from)) / nu;
      if (!best || s < *best) best = s;
    }
    if (!best) return;  // the leg stays inside
    BoundaryHit h;
    h.point = add(from, scale(to_q(u), *best));
    h.curve_edge = edge;
    h.tangent = u;
    h.weight = weight;
    for (std::size_t i = 0; i < poly.vertices.size(); ++i)
      if (poly.vertices[i] == h.point) h.polygon_vertex = static_cast<int>(i);
    if (h.polygon_vertex >= 0) {
      auto [a, b] = poly.corner(static_cast<std::size_t>(h.polygon_vertex));
      long long ia = std::llabs(det2(u, poly.edges[a].tangent));
      long long ib = std::llabs(det2(u, poly.edges[b].tangent));
      h.index = std::max(ia, ib);
      h.kind = (ia == 1 && ib == 1) ? HitKind::smooth_point : HitKind::unsupported;
    } else {
      for (std::size_t i = 0; i < poly.edges.size(); ++i)
        if (on_edge(poly.edges[i], h.point)) h.boundary_edge = static_cast<int>(i);
      if (h.boundary_edge < 0) throw NumericError("boundary hit not located on an edge");
      h.index = std::llabs(det2(u, poly.edges[static_cast<std::size_t>(h.boundary_edge)].tangent));
      h.kind = h.index == 1 ? HitKind::circle_boundary : h.index == 2 ? HitKind::moebius : HitKind::unsupported;
    }
    hits.push_back(h);
  };
  for (std::size_t i = 0; i < c.edges.size(); ++i) {
    const auto& e = c.edges[i];
    if (e.is_ray()) {
      shoot(i, c.vertices[static_cast<std::size_t>(e.tail)], e.direction, e.weight);
    } else if (e.is_line()) {
      if (!poly.contains(e.base) || poly.on_boundary(e.base)) throw InputError("line base point must be interior");
      shoot(i, e.base, e.direction, e.weight);
      shoot(i, e.base, {-e.direction[0], -e.direction[1]}, e.weight);
    }
  }
  return hits;
}

LiftTopology lift_topology(const PlaneCurve& c, const DelzantPolygon& poly) {
  auto hits = classify_boundary(c, poly);
  CurveTopology ct = curve_topology(c);
  LiftTopology t;
  t.euler = ct.euler;
  t.components = ct.components;
  t.punctures = ct.punctures;
  for (const auto& h : hits) {
    if (h.kind == HitKind::unsupported)
      throw InputError("boundary hit of lattice index " + std::to_string(h.index) + " has no local model");
    int w = static_cast<int>(h.weight);
    t.punctures -= w;
    if (h.kind == HitKind::smooth_point) {
      t.euler += w;
      t.disk_caps += w;
    } else if (h.kind == HitKind::circle_boundary) {
      t.boundary_circles += w;
    } else {
      t.moebius_caps += w;
      t.orientable = false;
    }
  }
  int rest = 2 * t.components - t.euler - t.boundary_circles - t.punctures;
  if (t.orientable) {
    t.genus = rest / 2;
  } else {
    t.crosscaps = rest;
    t.audin_ok = t.euler % 4 == 0;
  }
  return t;
}

std::vector<DiskClass> default_disk_classes(const DelzantPolygon& poly) {
  std::vector<DiskClass> out;
  if (poly.closed) out.push_back({DiskClass::Kind::generator, 0, "tau"});
  for (std::size_t i = 0; i < poly.edges.size(); ++i)
    out.push_back({DiskClass::Kind::facet, i, "beta_" + std::to_string(i)});
  out.push_back({DiskClass::Kind::fiber, 0, "fibre"});
  return out;
}

MonotoneReport monotone_report(const PlaneCurve& c, const DelzantPolygon& poly, const std::vector<DiskClass>& classes) {
  if (c.vertices.size() != 1) throw InputError("monotonicity needs a curve with exactly one vertex");
  const QPoint& v = c.vertices.front();
  if (!poly.contains(v) || poly.on_boundary(v)) throw InputError("vertex must be interior to the polygon");
  auto distance = [&](std::size_t i) { return dot(to_q(poly.edges[i].normal), v) - poly.edges[i].offset; };
  MonotoneReport r;
  for (const auto& k : classes) {
    MonotoneEntry e;
    e.label = k.label;
    switch (k.kind) {
      case DiskClass::Kind::facet:
        if (k.facet >= poly.edges.size()) throw InputError("disk class names an unknown facet");
        e.mu = 2;
        e.omega = distance(k.facet);
        break;
      case DiskClass::Kind::fiber:
        e.mu = 0;
        e.omega = 0;
        break;
      case DiskClass::Kind::generator:
        if (!poly.closed) throw InputError("the generator class needs a compact polygon");
        e.mu = 2 * static_cast<long long>(poly.edges.size());
        e.omega = 0;
        for (std::size_t i = 0; i < poly.edges.size(); ++i) e.omega += distance(i);
        break;
    }
    r.entries.push_back(e);
  }
  r.proportional = true;
  for (const auto& e : r.entries) {
    if (e.omega == 0) {
      if (e.mu != 0) r.proportional = false;
      continue;
    }
    Rational k = Rational(e.mu) / e.omega;
    if (!r.factor) r.factor = k;
    else if (*r.factor != k) r.proportional = false;
  }
  if (!r.proportional) r.factor.reset();
  return r;
}

}  // namespace lagpants
