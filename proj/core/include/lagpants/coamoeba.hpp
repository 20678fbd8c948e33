#pragma once

#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "lagpants/exact.hpp"
#include "lagpants/tropical.hpp"

namespace lagpants {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kHalfPi = kPi / 2;

// R^d / pi Z^d.
struct FlatTorus {
  int dim = 1;
  // Representative in [0, pi)^d.
  Vec reduce(const Vec& y) const;
  // Shortest representative of a - b, each coordinate in [-pi/2, pi/2).
  Vec difference(const Vec& a, const Vec& b) const;
  double distance(const Vec& a, const Vec& b) const;
};

enum class CoamoebaClass { interior_plus, interior_minus, vertex, face, outside };

struct Membership {
  CoamoebaClass kind = CoamoebaClass::outside;
  int vertex = -1;
  std::vector<int> face;  // J, when kind == face
};

// Standard coamoeba in dimension n + 1: the open simplex with vertices
// p_0 = 0, p_k = (pi/2) e_k and its image under y -> -y, plus the vertices.
struct Coamoeba {
  int n = 1;
  FlatTorus torus;

  int vertex_count() const { return n + 2; }
  Vec vertex(int k) const;
  // Extended coordinates (pi/2 - sum y, y_1, ..., y_{n+1}).
  Vec extended(const Vec& y) const;
};

Coamoeba standard_coamoeba(int n);

Membership membership(const Coamoeba& c, const Vec& y, double eps = 1e-10);
// y = pi * q with q rational.
Membership membership_exact(const Coamoeba& c, const QPoint& q);
// Closed under inclusion of vertices; open faces are excluded.
bool in_coamoeba(const Coamoeba& c, const Vec& y, double eps = 1e-10);

// y -> T y + (pi/2) shift on the torus, with the base map x -> base x.
struct TorusAffineMap {
  IMatrix T;
  IPoint shift;
  IMatrix base;

  Vec apply(const Vec& y) const;
  Vec apply_base(const Vec& x) const;
};

// R_k, exchanging p_0 and p_k, with R*_k as base map.
TorusAffineMap symmetry(int n, int k);
// The element of the symmetry group acting on vertex labels by perm.
TorusAffineMap permutation_symmetry(int n, const std::vector<int>& perm);

// Polar coordinates (alpha_1..alpha_n, t) at vertex p_k; the axis coordinate
// of the chart at p_0 carries t, the others t * alpha_j.
struct BlowupChart {
  int n = 1;
  int vertex = 0;
  int axis = 0;
  double half_width = 0.3 * kHalfPi;

  Vec to_torus(const Vec& alpha, double t) const;
  // Inverse for y near the vertex; fails with DomainError when the axis coordinate vanishes.
  std::pair<Vec, double> from_torus(const Vec& y) const;
};

BlowupChart blowup_chart(const Coamoeba& c, int k, int axis = -1);

// C_e for a cell e of a subdivision: y with (2/pi) y in e + 2 Z^d, or -y so.
struct CellCoamoeba {
  std::vector<IPoint> vertices;
  HRep hull;
  int dim = 0;

  // Closure of C_e.
  bool contains_closed(const Vec& y, double eps = 1e-10) const;
  // Relative interior and vertices only.
  bool contains(const Vec& y, double eps = 1e-10) const;
};

CellCoamoeba cell_coamoeba(const std::vector<IPoint>& vertices);

// Weighted trivalent vertex as a quotient of the standard one.
struct CoveringModel {
  IMatrix B;  // columns w1 u1, w2 u2
  long long degree = 1;
  std::vector<long long> leg_components;  // circles over each leg, order u0, u1, u2
  int euler = -1;
  int punctures = 3;
  int genus = 0;

  // beta(y) = B^T y, a covering of degree |det B| onto the standard torus.
  Vec beta(const Vec& y) const;
  Vec base_from_standard(const Vec& x_std) const;
};

CoveringModel covering_coamoeba(const TropicalLine& l);

// Four-valent vertex with rays (1,1), (-1,1), (-1,-1), (1,-1).
double four_valent_potential(const Vec& y);
Vec four_valent_gradient(const Vec& y);
bool in_four_valent_coamoeba(const Vec& y, double eps = 1e-12);

}  // namespace lagpants
