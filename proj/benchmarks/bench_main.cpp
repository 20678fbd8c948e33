#include <benchmark/benchmark.h>

#include <random>

#include "lagpants/lift.hpp"
#include "lagpants/pants.hpp"
#include "lagpants/polyhedral.hpp"
#include "lagpants/tropical.hpp"

using namespace lagpants;

namespace {

Vec interior_point(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> U(0.05, 1.0);
  Vec w(n + 2);
  for (int i = 0; i < n + 2; ++i) w(i) = U(rng);
  w *= kHalfPi / w.sum();
  return w.tail(n + 1);
}

PlaneCurve example_curve() {
  LatticePolytope p = LatticePolytope::from_points({{0, 0}, {1, 2}, {2, 1}});
  LiftingFunction nu;
  for (const auto& lp : p.lattice_points) nu.values[lp] = 0;
  nu.values[{0, 0}] = 1;
  return plane_curve(tropical_hypersurface(regular_subdivision(p, nu)));
}

}  // namespace

static void BM_Hessian(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  PantsMap pm(n);
  std::mt19937_64 rng(1);
  Vec y = interior_point(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(pm.hessian(y));
}
BENCHMARK(BM_Hessian)->Arg(1)->Arg(2);

static void BM_FiberSolve(benchmark::State& state) {
  PantsMap pm(1);
  ProjectionPair pp = project(1, {1}, 0);
  std::mt19937_64 rng(2);
  Vec q = interior_point(1, rng);
  Vec x = pp.project_base(pm.h(q));
  Vec yf = pp.project_torus(q);
  for (auto _ : state) benchmark::DoNotOptimize(fiber_solve(pm, pp, x, yf));
}
BENCHMARK(BM_FiberSolve);

static void BM_RegularSubdivision(benchmark::State& state) {
  long long d = state.range(0);
  LatticePolytope p = LatticePolytope::from_points({{0, 0}, {d, 0}, {0, d}});
  LiftingFunction nu;
  for (const auto& lp : p.lattice_points) nu.values[lp] = lp[0] * lp[0] + lp[1] * lp[1] + lp[0] * lp[1];
  for (auto _ : state) benchmark::DoNotOptimize(regular_subdivision(p, nu));
}
BENCHMARK(BM_RegularSubdivision)->Arg(3)->Arg(6)->Arg(10);

static void BM_SmoothLift(benchmark::State& state) {
  PlaneCurve c = example_curve();
  GluingSchedule s = default_schedule(c);
  int res = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(smooth_lift(c, 0.5, s, res));
}
BENCHMARK(BM_SmoothLift)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
