#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lagpants/exact.hpp"
#include "lagpants/polyhedral.hpp"

namespace lagpants {

// A cell of a tropical hypersurface: conv(vertices) + cone(rays).
struct TropicalCell {
  int dim = 0;
  std::vector<QPoint> vertices;
  std::vector<IPoint> rays;
  std::size_t dual = 0;  // index into Subdivision::cells
  long long weight = 1;  // lattice length of the dual edge for top cells
};

struct TropicalComplex {
  std::size_t ambient_dim = 0;
  std::vector<TropicalCell> cells;  // decreasing dimension
  std::optional<Subdivision> subdivision;
  std::optional<PiecewiseAffine> nu_check;

  // Index of the tropical cell dual to subdivision cell i, if any.
  std::optional<std::size_t> cell_of_dual(std::size_t i) const;
};

TropicalComplex tropical_hypersurface(const Subdivision& s);

// Plane curves. A bounded edge runs tail -> head; a ray has head = -1;
// a line without vertices has tail = head = -1.
struct CurveEdge {
  int tail = -1;
  int head = -1;
  QPoint base;
  IPoint direction;
  long long weight = 1;
  std::optional<std::size_t> dual;

  bool is_bounded() const { return tail >= 0 && head >= 0; }
  bool is_ray() const { return tail >= 0 && head < 0; }
  bool is_line() const { return tail < 0; }
};

struct PlaneCurve {
  std::vector<QPoint> vertices;
  std::vector<CurveEdge> edges;
  std::vector<std::optional<std::size_t>> vertex_dual;
  std::optional<Subdivision> subdivision;

  std::size_t bounded_count() const;
};

PlaneCurve plane_curve(const TropicalComplex& x);

struct RayInput {
  std::size_t vertex;
  IPoint direction;
  long long weight = 1;
};
struct SegmentInput {
  std::size_t tail, head;
  long long weight = 1;
};
struct LineInput {
  QPoint point;
  IPoint direction;
  long long weight = 1;
};
// Assemble a curve from explicit data. Throws InputError on malformed input.
PlaneCurve make_curve(const std::vector<QPoint>& vertices, const std::vector<SegmentInput>& segments,
                      const std::vector<RayInput>& rays, const std::vector<LineInput>& lines = {});

// Edges at a vertex in counterclockwise order, with the dual lattice point of
// each complementary region. regions[i] is the region just before dirs[i].
struct VertexStar {
  std::size_t vertex = 0;
  std::vector<std::size_t> edges;
  std::vector<IPoint> dirs;  // primitive, pointing away from the vertex
  std::vector<long long> weights;
  std::vector<IPoint> regions;
};

// Stars of all vertices with globally consistent region labels. Labels come
// from the subdivision when present, else from propagation along bounded edges.
std::vector<VertexStar> vertex_stars(const PlaneCurve& c);

bool balancing_check(const PlaneCurve& c);
bool balancing_check(const TropicalComplex& x);
bool is_smooth(const PlaneCurve& c);
bool is_smooth(const TropicalComplex& x);

struct TropicalLine {
  QPoint center;
  std::vector<IPoint> generators;
  std::vector<long long> weights;
  std::vector<std::size_t> edge_ids;
};

TropicalLine tangent_line(const PlaneCurve& c, std::size_t vertex);
bool balancing_check(const TropicalLine& l);

// Integral affine frame x_loc = A (x - origin). The induced torus map is
// y = A^T y_loc + (pi/2) torus_origin.
struct AffineFrame {
  QPoint origin;
  IMatrix A;
  IMatrix A_inv;
  std::vector<std::size_t> order;  // generator indices as u0, u1, ..., u_{n+1}
  IPoint torus_origin;

  QPoint to_local(const QPoint& x) const;
  QPoint from_local(const QPoint& x_loc) const;
  IPoint direction_to_local(const IPoint& u) const;
};

AffineFrame adapted_frame(const TropicalLine& l);
// Frame at a curve vertex, with the torus origin read from the star.
AffineFrame vertex_frame(const PlaneCurve& c, const VertexStar& star);

// Reverse lexicographic order: last coordinate compared first.
bool revlex_less(const IPoint& a, const IPoint& b);

}  // namespace lagpants
