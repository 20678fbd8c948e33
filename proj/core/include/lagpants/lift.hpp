#pragma once

#include <array>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "lagpants/coamoeba.hpp"
#include "lagpants/pants.hpp"
#include "lagpants/tropical.hpp"

namespace lagpants {

// w parallel circles {y : <d, y> = theta mod pi / w} in the plane torus.
struct EdgeFiber {
  IPoint direction;  // primitive edge direction d
  IPoint tangent;    // rot(d), the circle direction
  double theta = 0.0;
  long long weight = 1;

  // Point on sheet k at angle phi in [0, pi).
  Eigen::Vector2d point(double phi, long long sheet = 0, double shift = 0.0) const;
  double distance(const Eigen::Vector2d& y, double shift = 0.0) const;
};

struct PLCellPiece {
  std::size_t cell = 0;  // subdivision cell e
  TropicalCell base;     // its dual
  CellCoamoeba fiber;
};

struct PLVertexPiece {
  std::size_t vertex = 0;
  Eigen::Vector2d center;
  std::vector<IPoint> dual_polygon;  // vertices, counterclockwise
  long long area = 1;                // normalized lattice area

  double distance(const Eigen::Vector2d& y) const;  // to the closure of C_e
};

struct PLEdgePiece {
  std::size_t edge = 0;
  Eigen::Vector2d base;
  Eigen::Vector2d direction;  // primitive, as a real vector
  double s_min = 0.0;
  double s_max = 0.0;  // infinite for rays and lines before truncation
  EdgeFiber fiber;
  long long winding = 0;  // twist class over [twist_lo, twist_hi]
  double twist_lo = 0.0, twist_hi = 0.0;

  double shift_at(double s) const;
};

struct PLLift {
  std::size_t ambient_dim = 2;
  std::vector<PLCellPiece> pieces;
  std::optional<PlaneCurve> curve;
  std::vector<PLVertexPiece> vertex_pieces;
  std::vector<PLEdgePiece> edge_pieces;
  int euler = 0;
  int punctures = 0;
  int components = 0;
  int genus = 0;  // summed over components
  long long twist_class = 0;
};

PLLift pl_lift(const TropicalComplex& x);
PLLift pl_lift(const PlaneCurve& c);

// Smooth non-increasing cutoff: 1 for s <= 0, 0 for s >= 1.
class Cutoff {
 public:
  Cutoff();
  double value(double s) const;
  double d1(double s) const;
  double d2(double s) const;

 private:
  std::vector<double> table_;
  double norm_ = 1.0;
};
const Cutoff& cutoff();

struct LegSchedule {
  std::size_t vertex = 0;
  std::size_t edge = 0;
  int leg = 0;  // 0, 1, 2 in the adapted frame
  int k = 0;    // auxiliary index of the projection pair
  IPoint direction;
  // Leg parameters r' < r'' < rbar < r in units of the primitive direction.
  double r1 = 0, r2 = 0, r3 = 0, r4 = 0;
};

struct VertexSchedule {
  std::size_t vertex = 0;
  double radius = 1.0;
  double lambda = 1.0;
  AffineFrame frame;
  VertexStar star;
};

struct EdgeSchedule {
  std::size_t edge = 0;
  // Parameter along the edge from its tail: flat part rho_f and its extension rho'_f.
  double rho_lo = 0, rho_hi = 0;
  double ext_lo = 0, ext_hi = 0;
};

struct GluingSchedule {
  std::vector<VertexSchedule> vertices;
  std::vector<LegSchedule> legs;
  std::vector<EdgeSchedule> edges;
  double truncation = 3.0;  // distance from a vertex at which rays are cut

  const LegSchedule* leg(std::size_t vertex, std::size_t edge) const;
};

GluingSchedule default_schedule(const PlaneCurve& c);
// Throws ConfigError when a constraint of the schedule fails at scale t.
void validate(const GluingSchedule& s, const PlaneCurve& c, double t = 1.0);

enum class PieceKind { pants, collar, cylinder };

struct MeshPoint {
  Eigen::Vector2d x;
  Eigen::Vector2d y;  // in [0, pi)^2
  Eigen::Vector4d v;  // tangent frame in (x1, x2, y1, y2)
  Eigen::Vector4d w;
  PieceKind kind = PieceKind::pants;
  int vertex = -1;
  int edge = -1;
  bool analytic = true;
};

enum class ProjectionMode { x1_x2_y1, x1_x2_y2 };

struct LagrangianMesh {
  std::vector<MeshPoint> points;
  std::vector<std::array<std::size_t, 4>> quads;
  double scale = 1.0;
  double truncation = 3.0;

  void write_off(std::ostream& os, ProjectionMode mode) const;
  void write_obj(std::ostream& os, ProjectionMode mode) const;
  std::size_t count(PieceKind k) const;
};

struct TwistData {
  std::map<std::size_t, long long> winding;  // edge -> class of the loop sigma_f
  long long total() const;
};

LagrangianMesh smooth_lift(const PlaneCurve& c, double t, const GluingSchedule& sched, int resolution = 128,
                           const TwistData* twist = nullptr);

// max |omega(v, w)| over unit frames, omega = (1/pi) sum dx_i ^ dy_i.
double symplectic_residual(const LagrangianMesh& m);
double symplectic_residual(const LagrangianMesh& m, PieceKind kind);

// Symmetric Hausdorff estimate in the product of the Euclidean plane and the flat torus.
double hausdorff_distance(const LagrangianMesh& m, const PLLift& pl, int resolution = 128);
// Point-sample Hausdorff distance between two meshes.
double hausdorff_distance(const LagrangianMesh& a, const LagrangianMesh& b);

// Twists the edge fibres over the flat parts; returns the class n_sigma.
long long twist(PLLift& pl, const TwistData& sigma, const GluingSchedule& sched);
long long twist(LagrangianMesh& m, const TwistData& sigma, const GluingSchedule& sched, const PlaneCurve& c);

struct ExactnessReport {
  bool exact = true;
  std::vector<Rational> constants;  // c_f per edge
};
ExactnessReport exactness_check(const PlaneCurve& c);

// Topology of the PL lift of a plane curve, without boundary caps.
struct CurveTopology {
  int euler = 0;
  int punctures = 0;
  int components = 0;
  std::vector<long long> vertex_area;
};
CurveTopology curve_topology(const PlaneCurve& c);

}  // namespace lagpants
