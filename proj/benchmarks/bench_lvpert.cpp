#include <benchmark/benchmark.h>

#include "lvpert/diagnostics.hpp"
#include "lvpert/methods.hpp"
#include "lvpert/presets.hpp"

using namespace lvpert;

static void BM_TaylorCoefficients(benchmark::State& state) {
  const InitialValueProblem ivp = preset("case-V").problem();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(taylor_coefficients(ivp, order));
}
BENCHMARK(BM_TaylorCoefficients)->Arg(10)->Arg(40)->Arg(200);

static void BM_AdomianSeries(benchmark::State& state) {
  const InitialValueProblem ivp = preset("case-V").problem();
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(adomian_series(ivp, order));
}
BENCHMARK(BM_AdomianSeries)->Arg(10)->Arg(20);

static void BM_VimIterates(benchmark::State& state) {
  const InitialValueProblem ivp = preset("case-V").problem();
  const int iterations = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(vim_iterates(ivp, iterations));
}
BENCHMARK(BM_VimIterates)->Arg(10)->Arg(20);

static void BM_Integrate(benchmark::State& state) {
  const auto& name = state.range(0) == 0 ? "case-I" : "case-V";
  const InitialValueProblem ivp = preset(name).problem();
  const auto grid = linspace(0.0, ivp.t_end(), 2001);
  for (auto _ : state) benchmark::DoNotOptimize(integrate(ivp, {}, grid));
  state.SetLabel(name);
}
BENCHMARK(BM_Integrate)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

static void BM_EstimatePeriod(benchmark::State& state) {
  const InitialValueProblem ivp = preset("case-V").problem();
  for (auto _ : state) benchmark::DoNotOptimize(estimate_period(ivp));
}
BENCHMARK(BM_EstimatePeriod)->Unit(benchmark::kMicrosecond);

static void BM_SelfIntersection(benchmark::State& state) {
  const InitialValueProblem ivp = preset("case-V").problem();
  const auto traj =
      sample_series(taylor_coefficients(ivp, 10), linspace(0.0, 10.0, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(self_intersection(traj));
}
BENCHMARK(BM_SelfIntersection)->Arg(501)->Arg(2001)->Unit(benchmark::kMicrosecond);

static void BM_FailureReport(benchmark::State& state) {
  const InitialValueProblem ivp = preset("case-V").problem();
  for (auto _ : state) benchmark::DoNotOptimize(failure_report(ivp, MethodKind::Taylor, 10));
}
BENCHMARK(BM_FailureReport)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
