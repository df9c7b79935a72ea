// Serial reference vs OpenMP kernels for the batch sweeps.

#include "ppart/sweep.hpp"

#include <benchmark/benchmark.h>

using namespace ppart;

namespace {

std::vector<GroupSpec> classical_groups(int max_rank) {
  std::vector<GroupSpec> v;
  for (int n = 1; n <= max_rank; ++n)
    v.push_back(GroupSpec::make(Family::A, n));
  for (int n = 2; n <= max_rank; ++n) {
    v.push_back(GroupSpec::make(Family::B, n));
    v.push_back(GroupSpec::make(Family::C, n));
  }
  for (int n = 4; n <= max_rank; ++n)
    v.push_back(GroupSpec::make(Family::D, n));
  return v;
}

void BM_GLSweep(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep_gl(1, static_cast<int>(state.range(0)), exec));
}

void BM_IdentitySweep(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(1));
  const auto groups = classical_groups(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(identity_sweep(groups, exec));
}

void BM_DimsSweep(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(1));
  const auto groups = classical_groups(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(dims_sweep(groups, exec));
}

} // namespace

BENCHMARK(BM_GLSweep)->ArgsProduct({{8, 10}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_IdentitySweep)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DimsSweep)->ArgsProduct({{6, 8}, {0, 1}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
