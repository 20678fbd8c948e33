#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lagpants/exact.hpp"
#include "lagpants/tropical.hpp"

namespace lagpants {

// Edge of a moment polygon, {<normal, x> >= offset} on the interior side.
struct PolygonEdge {
  QPoint base;
  IPoint tangent;  // primitive, boundary traversed counterclockwise
  IPoint normal;   // primitive inward normal, rot(tangent)
  Rational offset;
  std::optional<QPoint> start;  // absent for an unbounded end
  std::optional<QPoint> end;
};

struct DelzantPolygon {
  std::vector<QPoint> vertices;
  std::vector<PolygonEdge> edges;  // edges[i] leaves the corner vertices[i] when closed
  bool closed = true;

  // Counterclockwise vertex cycle of a bounded polygon.
  static DelzantPolygon from_vertices(const std::vector<QPoint>& vertices);
  // Unbounded polygon: a ray arriving at vertices.front() from direction `incoming`
  // (pointing away from the polygon vertex), the chain, and a ray leaving the last vertex.
  static DelzantPolygon from_chain(const IPoint& incoming, const std::vector<QPoint>& vertices, const IPoint& outgoing);

  bool contains(const QPoint& x) const;
  bool on_boundary(const QPoint& x) const;
  // Edges meeting at vertex i, as (incoming, outgoing) indices.
  std::pair<std::size_t, std::size_t> corner(std::size_t i) const;
};

bool delzant_check(const DelzantPolygon& poly);
bool delzant_vertex_check(const DelzantPolygon& poly, std::size_t vertex);

enum class HitKind { circle_boundary, smooth_point, moebius, unsupported };

struct BoundaryHit {
  QPoint point;
  std::size_t curve_edge = 0;
  IPoint tangent;  // direction of the curve edge towards the boundary
  long long weight = 1;
  int boundary_edge = -1;    // polygon edge, when the hit is interior to it
  int polygon_vertex = -1;   // polygon vertex, when the hit is a corner
  long long index = 1;       // |det(tangent, edge tangent)|, max over both edges at a corner
  HitKind kind = HitKind::unsupported;
};

std::vector<BoundaryHit> classify_boundary(const PlaneCurve& c, const DelzantPolygon& poly);

struct LiftTopology {
  int euler = 0;
  bool orientable = true;
  int boundary_circles = 0;
  int punctures = 0;  // legs that leave every compact part of the polygon
  int components = 1;
  int genus = 0;      // orientable case
  int crosscaps = 0;  // non-orientable case
  int disk_caps = 0;
  int moebius_caps = 0;
  bool audin_ok = true;  // chi = 0 mod 4 for non-orientable closed-up lifts
};

LiftTopology lift_topology(const PlaneCurve& c, const DelzantPolygon& poly);

struct DiskClass {
  enum class Kind { facet, fiber, generator };
  Kind kind = Kind::facet;
  std::size_t facet = 0;
  std::string label;
};

struct MonotoneEntry {
  std::string label;
  long long mu = 0;
  Rational omega;
};

struct MonotoneReport {
  std::vector<MonotoneEntry> entries;
  bool proportional = false;
  std::optional<Rational> factor;
};

// Generator (bounded polygons only), one disk per facet, one disk in the fibre.
std::vector<DiskClass> default_disk_classes(const DelzantPolygon& poly);
MonotoneReport monotone_report(const PlaneCurve& c, const DelzantPolygon& poly, const std::vector<DiskClass>& classes);

}  // namespace lagpants
