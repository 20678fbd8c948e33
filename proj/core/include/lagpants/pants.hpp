#pragma once

#include <optional>
#include <vector>

#include "lagpants/coamoeba.hpp"

namespace lagpants {

// Point of the blow-up chart at vertex p_k: the chart at p_0 maps (alpha, t)
// to y_c with y_c[axis] = t and the other coordinates t * alpha_j; the chart
// at p_k is composed with R_k.
struct ChartPoint {
  int vertex = 0;
  int axis = 0;
  Vec alpha;
  double t = 0.0;
};

// Rescaled pair of pants in dimension n + 1 with scale lambda.
struct PantsMap {
  int n = 1;
  double lambda = 1.0;
  double chart_switch = 1e-3;

  explicit PantsMap(int n_ = 1, double lambda_ = 1.0);

  // Torus evaluation; y must lie in C (open halves, not near a vertex for h).
  double F(const Vec& y) const;
  Vec h(const Vec& y) const;
  Mat hessian(const Vec& y) const;

  // Blow-up chart evaluation, smooth across t = 0.
  double F(const ChartPoint& c) const;
  Vec h(const ChartPoint& c) const;
  Vec to_torus(const ChartPoint& c) const;
  // Chart at the nearest vertex, axis = largest coordinate of R_k y.
  ChartPoint chart_of(const Vec& y) const;

  // Switches to the chart when the distance to a vertex is below chart_switch.
  Vec h_auto(const Vec& y) const;
  // Closest vertex index and its distance.
  std::pair<int, double> nearest_vertex(const Vec& y) const;
};

// h on the exceptional set at p_0, for ratios alpha (axis coordinate = 1).
Vec h_exceptional(int n, const Vec& alpha, double lambda = 1.0);

struct RegionClass {
  std::vector<int> inside;       // k with x in H_k
  std::vector<int> on_boundary;  // k with x on S_k
  bool outside() const { return inside.empty(); }
};

// Membership in H = union of H_k, H_0 = {x_j >= 0, prod x_j <= (n+1)^-(n+1)}, H_k = R*_k H_0.
RegionClass region_membership(const Vec& x, double tol = 1e-9);
// (n+1)^(n+1) prod x_j - 1 at R*_k x; zero on S_k.
double boundary_residual(const Vec& x, int k);

struct CellClass {
  bool plus = true;
  std::vector<std::vector<int>> W;                       // J with y in W_J
  std::vector<std::pair<std::vector<int>, int>> W_k;     // (J, k) with y in W_{J,k}
  std::vector<std::pair<int, int>> delta_boundary;       // (j, k) with y on the wall of Delta_jk
};

// Extended coordinates index 0..n+1; J ranges over nonempty proper subsets.
CellClass cell_classify(int n, const Vec& y, double tol = 1e-12);
bool in_delta(int n, const Vec& y, int j, int k, double tol = 1e-12);
bool in_W(int n, const Vec& y, const std::vector<int>& J, double tol = 1e-12);
// V_J = intersection of D_jk = {x_j >= x_k}, j in J, k not in J, with x_0 = 0.
bool in_V(const Vec& x, const std::vector<int>& J, double tol = 1e-12);

// Fibration of W_{J,k} over the face: torus side keeps the coordinates outside
// J, base side keeps those in J, after moving p_k to p_0 by a symmetry.
struct ProjectionPair {
  int n = 1;
  std::vector<int> J;  // subset of {0, ..., n+1}
  int k = 0;
  TorusAffineMap to_std;    // sends p_k to p_0
  TorusAffineMap from_std;
  std::vector<int> J_std;   // image of J, a subset of {1, ..., n+1}

  Vec project_torus(const Vec& y) const;
  Vec project_base(const Vec& x) const;
  std::vector<int> free_coords() const;   // 0-based coordinates in J_std
  std::vector<int> fixed_coords() const;  // the others
};

ProjectionPair project(int n, const std::vector<int>& J, int k);

struct FiberSolution {
  Vec y;
  int iterations = 0;
  double residual = 0.0;
  bool used_fallback = false;
};

// The point q with project_torus(q) = y_face and project_base(h(q)) = x.
FiberSolution fiber_solve(const PantsMap& pm, const ProjectionPair& pp, const Vec& x, const Vec& y_face);
// Fiber over a face point that sits at p_k in the blow-up: y_dir gives the
// direction of approach. Returns chart coordinates with t = 0.
ChartPoint fiber_solve_vertex(const PantsMap& pm, const ProjectionPair& pp, const Vec& x, const Vec& y_dir);

struct LegendreValue {
  double G = 0.0;
  Vec dG_dx;  // equals the J coordinates of q
  Vec dG_dy;  // equals -h on the coordinates outside J
  Vec q;
};

LegendreValue legendre_G(const PantsMap& pm, const ProjectionPair& pp, const Vec& x, const Vec& y_face);
// Full Legendre transform over int H: G(x) = <x, y> - F(y) with h(y) = x.
LegendreValue legendre_full(const PantsMap& pm, const Vec& x);

// Data of the explicit decomposition of H for n = 2.
namespace decomposition {
double z_of_t(double t);
Vec q(int k);               // q_0 = (1/3,1/3,1/3), q_k = R*_k q_0
Vec q_t(int k, double t);   // k in {0, 2, 3}
double section_coordinate(const Vec& x);  // x_1 - (x_2 + x_3)/3
double tau1(double x2);     // x_1 on tau_1
double tau2(double x1);     // x_2 on tau_2
Vec tau_intersection();
bool in_Q12(double x1, double x2, double tol = 1e-12);
bool in_H_empty(const Vec& x, double tol = 1e-12);
bool in_K1(const Vec& x, double tol = 1e-9);
}  // namespace decomposition

// h along sigma_0(t) = t a with sum a = pi/2.
Vec gamma_curve(const Vec& a, double t);
// h along ((pi/2 - b) t, b t, (1 - t) a), n = 2.
Vec eta_curve(double a, double b, double t);

// Potential of a covering model pulled back from the standard pants.
double covering_F(const PantsMap& pm, const CoveringModel& m, const Vec& y);
Vec covering_h(const PantsMap& pm, const CoveringModel& m, const Vec& y);

}  // namespace lagpants
