#include <benchmark/benchmark.h>

#include "guplab/guplab.hpp"

using namespace guplab;

namespace {

void BM_BuildLadder(benchmark::State& state) {
  const Eigen::Index dim = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_ladder(dim));
  }
}
BENCHMARK(BM_BuildLadder)->Arg(16)->Arg(64)->Arg(256);

void BM_BuildPOperator(benchmark::State& state) {
  const Eigen::Index dim = state.range(0);
  OscillatorParams params = natural_units();
  const double top = hermitian_spectrum(build_qP(params, dim).P).cwiseAbs().maxCoeff();
  params.beta = (0.5 / top) * (0.5 / top);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_p_operator(params, dim));
  }
}
BENCHMARK(BM_BuildPOperator)->Arg(16)->Arg(64)->Arg(128);

void BM_QuadraticSpectrum(benchmark::State& state) {
  const Eigen::Index dim = state.range(0);
  const DenseOperator h = build_hamiltonian(natural_units(), dim, HamiltonianForm::kQuadratic);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_spectrum(h));
  }
}
BENCHMARK(BM_QuadraticSpectrum)->Arg(64)->Arg(256);

void BM_Rk4TenPeriods(benchmark::State& state) {
  const OscillatorParams params = natural_units(0.2);
  const double T = params.period();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        integrate(PhasePoint{Chart::kDeformed, 1.0, 1.0}, params, 10.0 * T, T / 1000.0));
  }
}
BENCHMARK(BM_Rk4TenPeriods);

void BM_TangentFlowTenPeriods(benchmark::State& state) {
  const OscillatorParams params = natural_units(0.2);
  const double T = params.period();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        tangent_integrate(PhasePoint{Chart::kDeformed, 1.0, 1.0}, params, 10.0 * T, T / 1000.0));
  }
}
BENCHMARK(BM_TangentFlowTenPeriods);

void BM_EnsembleVolume(benchmark::State& state) {
  const OscillatorParams params = natural_units(0.3);
  const double T = params.period();
  const Ensemble ensemble = disc_ensemble(Chart::kDeformed, 1.0, 1.0, 0.05, 64, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ensemble_volume(ensemble, params, T, T / 200.0));
  }
}
BENCHMARK(BM_EnsembleVolume);

void BM_CoherentState(benchmark::State& state) {
  const CoherentSpec spec{Complex(2.0, 0.0), state.range(0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(coherent_state(spec));
  }
}
BENCHMARK(BM_CoherentState)->Arg(64)->Arg(256);

void BM_SeriesPSquared(benchmark::State& state) {
  const OscillatorParams params = natural_units(1.0);
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_P_squared(params, order));
  }
}
BENCHMARK(BM_SeriesPSquared)->Arg(10)->Arg(50)->Arg(200);

void BM_ExactCommutator(benchmark::State& state) {
  const Eigen::Index dim = state.range(0);
  const exact::ExactMatrix a = exact::ladder_a(dim);
  const exact::ExactMatrix a_dag = exact::ladder_a_dag(dim);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact::commutator(a, a_dag));
  }
}
BENCHMARK(BM_ExactCommutator)->Arg(16)->Arg(32);

}  // namespace

BENCHMARK_MAIN();
