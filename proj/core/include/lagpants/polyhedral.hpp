#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "lagpants/exact.hpp"

namespace lagpants {

struct Lattice {
  int rank = 2;
  // True when the rows form a basis of Z^rank.
  static bool is_unimodular(const IMatrix& basis);
};

// <normal, x> >= offset, or = offset for equations.
struct HalfSpace {
  QPoint normal;
  Rational offset;
};

struct HRep {
  std::vector<HalfSpace> equations;
  std::vector<HalfSpace> inequalities;
  bool contains(const QPoint& x) const;
  bool in_relative_interior(const QPoint& x) const;
};

int affine_dimension(const std::vector<QPoint>& pts);
// H-representation of conv(pts) in ambient coordinates (dimension 1 to 3).
HRep convex_hull(const std::vector<QPoint>& pts);
// Indices of the extreme points of conv(pts).
std::vector<std::size_t> extreme_points(const std::vector<QPoint>& pts);

struct LatticePolytope {
  std::vector<IPoint> vertices;
  std::vector<IPoint> lattice_points;

  std::size_t ambient_dim() const { return vertices.empty() ? 0 : vertices[0].size(); }
  int dim() const;
  // Convex hull of the given integer points, with its lattice points enumerated.
  static LatticePolytope from_points(const std::vector<IPoint>& pts);
};

struct LiftingFunction {
  std::map<IPoint, long long> values;
  long long at(const IPoint& p) const;
};

struct SubdivisionCell {
  std::vector<std::size_t> points;    // lattice points of P lying in the cell
  std::vector<std::size_t> vertices;  // extreme points among them
  int dim = 0;
};

struct Subdivision {
  LatticePolytope polytope;
  LiftingFunction lifting;
  // All faces of all top cells, ordered by decreasing dimension.
  std::vector<SubdivisionCell> cells;

  std::vector<std::size_t> top_cells() const;
  // Face relation cells[i] ⪯ cells[j].
  bool precedes(std::size_t i, std::size_t j) const;
  std::vector<IPoint> cell_vertices(std::size_t i) const;
};

Subdivision regular_subdivision(const LatticePolytope& p, const LiftingFunction& nu);

// Lattice-normalized volume of a simplex inside its own affine hull.
Integer normalized_volume(const std::vector<IPoint>& simplex);
bool is_unimodal(const Subdivision& s);

struct AffinePiece {
  IPoint slope;
  Rational constant;
};

struct PiecewiseAffine {
  std::vector<AffinePiece> pieces;
  Rational operator()(const QPoint& m) const;
  std::vector<std::size_t> argmin(const QPoint& m) const;
};

// Polyhedron conv(vertices) + cone(rays); lineality appears as a pair of opposite rays.
struct DualCell {
  int dim = 0;
  std::vector<QPoint> vertices;
  std::vector<IPoint> rays;
};

struct LegendreDual {
  PiecewiseAffine nu_check;
  std::vector<DualCell> dual;  // dual[i] corresponds to subdivision cell i
};

LegendreDual discrete_legendre(const Subdivision& s);

// V-representation of {E x = f, A x >= b} in small dimension.
DualCell polyhedron_vrep(const std::vector<HalfSpace>& equations,
                         const std::vector<HalfSpace>& inequalities, std::size_t dim);

}  // namespace lagpants
