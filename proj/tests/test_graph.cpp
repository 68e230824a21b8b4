#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "orient/graph.hpp"
#include "orient/graph_io.hpp"
#include "orient/rng.hpp"

using namespace orient;

namespace {

OrientedGraph directed_cycle(int n) {
  OrientedGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

OrientedGraph rotational_tournament(int n) {
  OrientedGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int d = 1; d <= (n - 1) / 2; ++d) g.add_edge(i, (i + d) % n);
  return g;
}

}  // namespace

TEST_CASE("add_edge rejects loops, duplicates and 2-cycles") {
  OrientedGraph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), InputError);
  g.add_edge(0, 1);
  CHECK_THROWS_AS(g.add_edge(0, 1), InputError);
  CHECK_THROWS_AS(g.add_edge(1, 0), InputError);
  CHECK_THROWS_AS(g.add_edge(0, 5), InputError);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("semidegree on the directed 3-cycle") {
  auto s = semidegree(directed_cycle(3));
  CHECK(s.min_semidegree == 1);
  CHECK(s.min_out == 1);
  CHECK(s.min_in == 1);
}

TEST_CASE("semidegree on the rotational 5-tournament") {
  auto s = semidegree(rotational_tournament(5));
  CHECK(s.min_semidegree == 2);
  for (int v = 0; v < 5; ++v) {
    CHECK(s.out[v] == 2);
    CHECK(s.in[v] == 2);
  }
}

TEST_CASE("induced subgraph relabels and keeps exactly the inside edges") {
  auto g = directed_cycle(3);
  auto sub = induced(g, {0, 1});
  CHECK(sub.graph.n() == 2);
  CHECK(sub.graph.edge_count() == 1);
  CHECK(sub.graph.has_edge(0, 1));

  auto whole = induced(g, {0, 1, 2});
  CHECK(whole.graph.edge_count() == 3);

  CHECK_THROWS_AS(induced(g, {0, 7}), InputError);
  CHECK_THROWS_AS(induced(g, {0, 0}), InputError);
}

TEST_CASE("induced composes") {
  Rng rng(11);
  OrientedGraph g = random_oriented_graph(10, 1, 5);
  auto first = induced(g, {1, 3, 4, 6, 8, 9});
  auto second = induced(first.graph, {0, 2, 3, 5});
  std::vector<int> direct_set;
  for (int i : {0, 2, 3, 5}) direct_set.push_back(first.vertex_map[i]);
  auto direct = induced(g, direct_set);
  CHECK(second.graph.edges() == direct.graph.edges());
}

TEST_CASE("reverse is an involution and flips semidegrees") {
  for (std::uint64_t seed : {1, 2, 3}) {
    OrientedGraph g = random_oriented_graph(9, 2, seed);
    OrientedGraph r = reverse(g);
    CHECK(reverse(r).edges() == g.edges());
    auto sg = semidegree(g), sr = semidegree(r);
    CHECK(sg.min_out == sr.min_in);
    CHECK(sg.min_in == sr.min_out);
    CHECK(sg.min_semidegree == sr.min_semidegree);
  }
}

TEST_CASE("almost regular tournaments") {
  SUBCASE("n=3 is the directed triangle up to isomorphism") {
    auto g = almost_regular_tournament(3, 42);
    auto s = semidegree(g);
    CHECK(s.min_semidegree == 1);
    CHECK(g.edge_count() == 3);
  }
  SUBCASE("odd n forces regularity") {
    auto g = almost_regular_tournament(5, 7);
    auto s = semidegree(g);
    for (int v = 0; v < 5; ++v) {
      CHECK(s.out[v] == 2);
      CHECK(s.in[v] == 2);
    }
  }
  SUBCASE("even n stays within one") {
    auto g = almost_regular_tournament(4, 9);
    auto s = semidegree(g);
    for (int v = 0; v < 4; ++v) {
      CHECK(s.out[v] >= 1);
      CHECK(s.out[v] <= 2);
      CHECK(std::abs(s.out[v] - s.in[v]) <= 1);
    }
  }
  SUBCASE("degree sums and imbalance over sizes and seeds") {
    for (int n : {2, 6, 8, 13, 20}) {
      for (std::uint64_t seed : {0, 1, 99}) {
        auto g = almost_regular_tournament(n, seed);
        CHECK(g.edge_count() == n * (n - 1) / 2);
        auto s = semidegree(g);
        long long total_out = std::accumulate(s.out.begin(), s.out.end(), 0LL);
        CHECK(total_out == 1LL * n * (n - 1) / 2);
        for (int v = 0; v < n; ++v) CHECK(std::abs(s.out[v] - s.in[v]) <= 1);
      }
    }
  }
  SUBCASE("deterministic given seed") {
    CHECK(almost_regular_tournament(9, 5).edges() == almost_regular_tournament(9, 5).edges());
  }
}

TEST_CASE("random_oriented_graph meets the requested bound") {
  CHECK_THROWS_AS(random_oriented_graph(9, 5, 1), InputError);  // 5 > floor(8/2)
  CHECK(semidegree(random_oriented_graph(9, 4, 1)).min_semidegree >= 4);  // 4 = floor(8/2) allowed
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    auto g = random_oriented_graph(8, 3, seed);
    CHECK(semidegree(g).min_semidegree >= 3);
  }
  auto g = random_oriented_graph(4, 1, 3);
  CHECK(semidegree(g).min_semidegree >= 1);
}

TEST_CASE("generated graphs never carry loops or 2-cycles") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto g = random_oriented_graph(7 + static_cast<int>(seed % 4), 1, seed);
    for (auto [u, v] : g.edges()) {
      CHECK(u != v);
      CHECK_FALSE(g.has_edge(v, u));
    }
  }
}

TEST_CASE("graph JSON round trip and diagnostics") {
  auto g = rotational_tournament(5);
  auto back = graph_from_json(graph_to_json(g));
  CHECK(back.edges() == g.edges());

  CHECK_THROWS_WITH_AS(graph_from_json(R"({"n":3,"edges":[[1,1]]})"),
                       doctest::Contains("(1,1)"), InputError);
  CHECK_THROWS_WITH_AS(graph_from_json(R"({"n":3,"edges":[[0,1],[1,0]]})"),
                       doctest::Contains("(1,0)"), InputError);
  CHECK_THROWS_AS(graph_from_json(R"({"edges":[]})"), InputError);
  CHECK_THROWS_AS(graph_from_json("not json"), InputError);
}

TEST_CASE("DOT export lists every edge as a directed arc") {
  auto g = directed_cycle(3);
  auto dot = graph_to_dot(g);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("0 -> 1;") != std::string::npos);
  CHECK(dot.find("2 -> 0;") != std::string::npos);
}

TEST_CASE("partition JSON round trip and validation") {
  QuadPartition p(6, {0, 3}, {1}, {4, 5}, {2});
  QuadPartition back = partition_from_json(6, partition_to_json(p));
  for (SetId j : {SetId::W, SetId::X, SetId::Y, SetId::Z}) CHECK(back.set(j) == p.set(j));

  CHECK_THROWS_AS(partition_from_json(6, R"({"W":[0],"X":[1],"Y":[2],"Z":[]})"), InputError);
  CHECK_THROWS_AS(partition_from_json(3, R"({"W":[0,1],"X":[1],"Y":[2],"Z":[]})"), InputError);
  CHECK_THROWS_AS(partition_from_json(3, R"({"W":[0,1]})"), InputError);
}
