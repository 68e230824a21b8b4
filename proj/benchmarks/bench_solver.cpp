#include <benchmark/benchmark.h>

#include "orient/extremal.hpp"
#include "orient/graph.hpp"
#include "orient/solver.hpp"

using namespace orient;

namespace {

OrientedGraph rotational_tournament(int n) {
  OrientedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= (n - 1) / 2; ++d) g.add_edge(i, (i + d) % n);
  return g;
}

void bench_directed_hamilton(benchmark::State& state) {
  OrientedGraph g = rotational_tournament(static_cast<int>(state.range(0)));
  Pattern p = Pattern::directed(g.n());
  for (auto _ : state) {
    auto r = find_oriented_hamilton(g, p);
    benchmark::DoNotOptimize(r.verdict);
  }
}

void bench_antidirected_refutation(benchmark::State& state) {
  // the hard case: proving non-existence on the extremal instance
  OrientedGraph g = build_extremal(static_cast<int>(state.range(0)), 1).graph;
  Pattern p = Pattern::alternating(g.n());
  for (auto _ : state) {
    auto r = find_oriented_hamilton(g, p);
    benchmark::DoNotOptimize(r.verdict);
  }
}

void bench_oracle(benchmark::State& state) {
  OrientedGraph g = build_extremal(static_cast<int>(state.range(0)), 1).graph;
  Pattern p = Pattern::alternating(g.n());
  for (auto _ : state) {
    auto r = oracle_enumerate(g, p);
    benchmark::DoNotOptimize(r.verdict);
  }
}

void bench_sweep(benchmark::State& state) {
  OrientedGraph g = rotational_tournament(9);
  for (auto _ : state) {
    auto report = pancyclicity_sweep(g, 3, 9);
    benchmark::DoNotOptimize(report.cells.size());
  }
}

}  // namespace

BENCHMARK(bench_directed_hamilton)->Arg(11)->Arg(15)->Arg(19);
BENCHMARK(bench_antidirected_refutation)->Arg(8)->Arg(10)->Arg(12);
BENCHMARK(bench_oracle)->Arg(8)->Arg(10);
BENCHMARK(bench_sweep);
