#include <benchmark/benchmark.h>

#include "orient/winding.hpp"

using namespace orient;

namespace {

void bench_wind_paths(benchmark::State& state) {
  ReducedCycle f{8};
  auto paths = build_paths({{static_cast<int>(state.range(0)), 10, false}});
  std::uint64_t seed = 1;
  for (auto _ : state) {
    auto w = wind_paths(f, paths, seed++);
    benchmark::DoNotOptimize(w.load[0]);
  }
}

void bench_concentration(benchmark::State& state) {
  ReducedCycle f{8};
  auto paths = build_paths({{1000, 10, false}});
  for (auto _ : state) {
    auto stats = concentration_experiment(f, paths, static_cast<int>(state.range(0)), 0.05, 7);
    benchmark::DoNotOptimize(stats.within_fraction);
  }
}

}  // namespace

BENCHMARK(bench_wind_paths)->Arg(1000)->Arg(10000);
BENCHMARK(bench_concentration)->Arg(50)->Arg(200);
