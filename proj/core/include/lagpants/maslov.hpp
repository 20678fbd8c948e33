#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "lagpants/lift.hpp"
#include "lagpants/pants.hpp"

namespace lagpants {

// Tangent plane of a Lagrangian surface in (x1, x2, y1, y2).
struct TangentFrame {
  Eigen::Vector4d v;
  Eigen::Vector4d w;
};

// Omega(v, w) for Omega = dz1 ^ dz2, dz = dy + i dx.
std::complex<double> holomorphic_volume(const TangentFrame& f);

struct WindingResult {
  long long winding = 0;     // change of arg Omega over the loop, in turns
  double total_phase = 0.0;  // radians
  double max_step = 0.0;     // largest phase increment between samples
  std::size_t samples = 0;
  bool orientation_preserved = true;
};

// Phase winding along a closed loop of frames; orientation is carried from
// one sample to the next.
WindingResult phase_winding(const std::vector<TangentFrame>& loop);

// Fibre of the standard pants over x_leg = level on leg 1 or 2, sampled until
// consecutive phases differ by at most max_step.
std::vector<TangentFrame> pants_basis_loop(const PantsMap& pm, int leg, double level, double max_step = 0.01);

// Loop around a flat cylinder over an edge with primitive direction d.
std::vector<TangentFrame> cylinder_loop(const IPoint& d, int samples = 64);

WindingResult maslov_winding(const LagrangianMesh& m, const std::vector<std::size_t>& loop);

}  // namespace lagpants
