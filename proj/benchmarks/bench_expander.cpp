#include <benchmark/benchmark.h>

#include "orient/expander.hpp"
#include "orient/extremal.hpp"

using namespace orient;

namespace {

void bench_exhaustive_expander(benchmark::State& state) {
  OrientedGraph g = build_extremal(static_cast<int>(state.range(0)), 1).graph;
  for (auto _ : state) {
    auto v = is_robust_outexpander(g, 0.1, 0.2, ExpanderMode::Exhaustive);
    benchmark::DoNotOptimize(v.is_expander);
  }
}

void bench_robust_outneighborhood(benchmark::State& state) {
  ExtremalInstance inst = build_extremal(static_cast<int>(state.range(0)), 1);
  auto s = inst.partition.set_union(SetId::W, SetId::Z);
  for (auto _ : state) {
    auto rn = robust_outneighborhood(inst.graph, s, 0.1);
    benchmark::DoNotOptimize(rn.size());
  }
}

void bench_ep_report(benchmark::State& state) {
  ExtremalInstance inst = build_extremal(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    auto report = check_extremal_partition(inst.graph, inst.partition, 0.05, 2);
    benchmark::DoNotOptimize(report.all_pass);
  }
}

}  // namespace

BENCHMARK(bench_exhaustive_expander)->Arg(12)->Arg(16)->Arg(20);
BENCHMARK(bench_robust_outneighborhood)->Arg(16)->Arg(40)->Arg(64);
BENCHMARK(bench_ep_report)->Arg(16)->Arg(40)->Arg(64);
