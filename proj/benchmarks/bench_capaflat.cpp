#include <benchmark/benchmark.h>

#include "capaflat/bounds.hpp"
#include "capaflat/harmonic_static.hpp"
#include "capaflat/potential.hpp"
#include "capaflat/radial.hpp"
#include "capaflat/variation.hpp"

namespace {

using namespace capaflat;

void BM_CapacityQuadrature(benchmark::State& state) {
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(capacity_quadrature(g));
  }
}
BENCHMARK(BM_CapacityQuadrature);

void BM_PotentialEvaluation(benchmark::State& state) {
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  const CapacitaryPotential pot = capacitary_potential(g);
  double r = 1.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(pot.phi(r));
    r = r < 100.0 ? r + 0.37 : 1.5;
  }
}
BENCHMARK(BM_PotentialEvaluation);

void BM_HsResidualGrid(benchmark::State& state) {
  const HSExampleProblem p =
      example_problem(HSExample::Schwarzschild, {1.0, 2.0, 1.0});
  const auto grid = log_grid(1.0, 100.0, 41);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        hs_residual(p.metric, p.phi, p.u, grid).sup_norm);
  }
}
BENCHMARK(BM_HsResidualGrid);

void BM_SolveHsOde(benchmark::State& state) {
  const HSExampleProblem p =
      example_problem(HSExample::Schwarzschild, {1.0, 2.0, 0.0});
  const auto grid = linear_grid(2.0, 10.0, 17);
  const double u0 = p.u.u.value(2.0);
  const double du0 = p.u.u.deriv(2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        solve_hs_ode(p.metric, p.phi, u0, du0, grid, 1e-2)
            .compatibility_defect);
  }
}
BENCHMARK(BM_SolveHsOde);

void BM_GradientPairing(benchmark::State& state) {
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  const CapacitaryPotential pot = capacitary_potential(g);
  const MetricPerturbation h =
      bump_perturbation(MetricPerturbation::Kind::Conformal, 1.8, 3.6, 0.07);
  for (auto _ : state) {
    benchmark::DoNotOptimize(gradient_pairing(g, pot, h));
  }
}
BENCHMARK(BM_GradientPairing);

void BM_CapacityFiniteDifference(benchmark::State& state) {
  const RadialMetric g = RadialMetric::schwarzschild({2.0, 1.0});
  const MetricPerturbation h =
      bump_perturbation(MetricPerturbation::Kind::RadialRR, 1.8, 3.6, 0.07);
  for (auto _ : state) {
    benchmark::DoNotOptimize(capacity_fd(g, h));
  }
}
BENCHMARK(BM_CapacityFiniteDifference);

}  // namespace

BENCHMARK_MAIN();
