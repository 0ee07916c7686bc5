// Serial reference versus OpenMP kernels for the three parallel workloads.
#include "sextic/geography.hpp"
#include "sextic/verifier.hpp"

#include <benchmark/benchmark.h>
#include <omp.h>

using sextic::verify::Execution;

namespace {

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void label(benchmark::State& state) {
  state.SetLabel(state.range(0) == 0 ? "serial" : "parallel x" + std::to_string(omp_get_max_threads()));
}

void BM_Verification(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sextic::verify::run_verification({}, mode(state)));
  label(state);
}

void BM_BruteForce(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sextic::verify::brute_force_check(10, mode(state)));
  label(state);
}

void BM_Geography(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sextic::geography::enumerate_by_genus(40, mode(state)));
  label(state);
}

}  // namespace

BENCHMARK(BM_Verification)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruteForce)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Geography)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
