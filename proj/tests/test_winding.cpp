#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>

#include "orient/rng.hpp"
#include "orient/winding.hpp"

using namespace orient;

TEST_CASE("a directed path of order k wraps the cycle once") {
  ReducedCycle f{8};
  std::vector<Pattern> paths{Pattern::directed(7)};  // order 8
  auto w = wind_paths(f, paths, 3);
  for (long long load : w.load) CHECK(load == 1);
  CHECK(w.assignment[0].size() == 8);
}

TEST_CASE("an antidirected 2-edge path oscillates between two adjacent clusters") {
  ReducedCycle f{5};
  std::vector<Pattern> paths{Pattern::parse("+-")};
  auto w = wind_paths(f, paths, 11);
  const auto& a = w.assignment[0];
  REQUIRE(a.size() == 3);
  CHECK(a[1] == (a[0] + 1) % 5);
  CHECK(a[2] == a[0]);
}

TEST_CASE("conservation across a large batch, deterministic given the seed") {
  ReducedCycle f{8};
  auto paths = build_paths(parse_path_spec("1000x10"));
  auto w1 = wind_paths(f, paths, 7);
  auto w2 = wind_paths(f, paths, 7);
  CHECK(w1.load == w2.load);
  CHECK(std::accumulate(w1.load.begin(), w1.load.end(), 0LL) == 10000);
}

TEST_CASE("cluster walk equals start plus the sign prefix sums") {
  Rng rng(5);
  ReducedCycle f{6};
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Pattern> paths{Pattern::random(9, rng)};
    auto w = wind_paths(f, paths, rng.next());
    const auto& a = w.assignment[0];
    int prefix = 0;
    for (std::size_t i = 0; i < paths[0].signs().size(); ++i) {
      prefix += paths[0].signs()[i];
      int expected = ((a[0] + prefix) % f.k + f.k) % f.k;
      CHECK(a[i + 1] == expected);
    }
  }
}

TEST_CASE("path spec parsing") {
  auto groups = parse_path_spec("500x10,500x8:alt");
  REQUIRE(groups.size() == 2);
  CHECK(groups[0].count == 500);
  CHECK(groups[0].order == 10);
  CHECK_FALSE(groups[0].alternating);
  CHECK(groups[1].alternating);
  CHECK(build_paths(groups).size() == 1000);
  CHECK_THROWS_AS(parse_path_spec("abc"), InputError);
  CHECK_THROWS_AS(parse_path_spec("10x0"), InputError);
  CHECK_THROWS_AS(parse_path_spec(""), InputError);
}

TEST_CASE("concentration at the reference scale: k=8, 1000 x 10, eps = 0.05") {
  ReducedCycle f{8};
  auto paths = build_paths(parse_path_spec("1000x10"));
  auto stats = concentration_experiment(f, paths, 200, 0.05, 7, 22);  // cap ~ (10^4)^(1/3)
  CHECK(stats.total_vertices == 10000);
  CHECK(stats.conservation_ok);
  CHECK(stats.within_fraction >= 0.95);
}

TEST_CASE("a single long path concentrates its own mass") {
  ReducedCycle f{8};
  std::vector<Pattern> paths{Pattern::directed(999)};  // order 1000
  auto stats = concentration_experiment(f, paths, 5, 0.05, 9);
  CHECK(stats.conservation_ok);
  // 1000 vertices over 8 clusters: every cluster gets 125 exactly, so the
  // deviation vanishes for a directed path; an alternating one parks 500 on
  // each of two adjacent clusters, and the statistic must surface that
  for (double dev : stats.max_deviation) CHECK(dev == 0);
  std::vector<Pattern> alt{Pattern::alternating(999)};
  auto skew = concentration_experiment(f, alt, 5, 0.05, 9);
  for (double dev : skew.max_deviation) CHECK(dev == doctest::Approx(500.0 - 125.0));
}

TEST_CASE("trial count one is a legal degenerate run") {
  ReducedCycle f{4};
  auto stats = concentration_experiment(f, build_paths(parse_path_spec("10x4")), 1, 0.5, 3);
  CHECK(stats.trials == 1);
  CHECK(stats.max_deviation.size() == 1);
}

TEST_CASE("the order cap is enforced") {
  ReducedCycle f{8};
  CHECK_THROWS_AS(
      concentration_experiment(f, build_paths(parse_path_spec("1x30")), 1, 0.05, 1, 21),
      InputError);
}

TEST_CASE("mean load converges to total/k within three standard errors") {
  ReducedCycle f{5};
  auto paths = build_paths(parse_path_spec("200x7"));
  const int trials = 400;
  auto stats = concentration_experiment(f, paths, trials, 0.05, 31);
  const double expected = 1400.0 / 5;
  // each a(i) varies by at most |P| per path; a generous per-trial sd bound
  // is sqrt(paths) * order; the standard error divides by sqrt(trials)
  const double se = std::sqrt(200.0) * 7 / std::sqrt(static_cast<double>(trials));
  for (double mean : stats.mean_load) CHECK(std::abs(mean - expected) <= 3 * se);
}
