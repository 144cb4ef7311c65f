#include <benchmark/benchmark.h>

#include "phasekit/fock.hpp"
#include "phasekit/integrate.hpp"
#include "phasekit/logseries.hpp"
#include "phasekit/pegg_barnett.hpp"
#include "phasekit/turski.hpp"

using namespace phasekit;

static void BM_BuildPolarGrid(benchmark::State& state) {
  const int n_radial = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_polar_grid(n_radial, 512, {}));
  }
}
BENCHMARK(BM_BuildPolarGrid)->Arg(64)->Arg(128)->Arg(256);

static void BM_PhaseMarginal(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto psi = make_coherent_state({std::sqrt(dim / 4.0), 0.0}, dim, /*force=*/true);
  const auto grid = default_marginal_grid(dim, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(phase_marginal(psi, grid));
  }
}
BENCHMARK(BM_PhaseMarginal)->Arg(16)->Arg(49)->Arg(128);

static void BM_PhaseOperatorAnalytic(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_phase_operator_analytic(dim, {}));
  }
}
BENCHMARK(BM_PhaseOperatorAnalytic)->Arg(32)->Arg(128);

static void BM_PhaseOperatorQuadrature(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const auto grid = default_operator_grid(dim, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_phase_operator_quadrature(dim, grid));
  }
}
BENCHMARK(BM_PhaseOperatorQuadrature)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_LogSeries(benchmark::State& state) {
  LogSeriesConfig cfg;
  cfg.dim_report = 4;
  cfg.dim_work = static_cast<int>(state.range(0));
  cfg.chi = 4.0 * std::sqrt(static_cast<double>(cfg.dim_work));
  cfg.series_order = 64;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_log_series_operator(cfg));
  }
}
BENCHMARK(BM_LogSeries)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_PBMoments(benchmark::State& state) {
  const int s = static_cast<int>(state.range(0));
  const auto psi = make_coherent_state({3.0, 0.0}, 49);
  const auto cfg = PBConfig::for_window(s, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(pb_moments(psi, cfg, 2));
  }
}
BENCHMARK(BM_PBMoments)->Arg(255)->Arg(1023)->Arg(10000);

BENCHMARK_MAIN();
