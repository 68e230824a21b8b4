#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>
#include <vector>

#include "orient/expander.hpp"
#include "orient/extremal.hpp"
#include "orient/graph.hpp"
#include "orient/rng.hpp"

using namespace orient;

namespace {

int target_min_semidegree(int n) { return (3 * n - 1 + 7) / 8 - 1; }  // ceil((3n-1)/8) - 1

// Exhaustive enumeration of antidirected paths (order >= 2) up to max_order;
// the visitor receives vertices and edge signs. Test-side oracle, independent
// of the library's checks.
void enumerate_antidirected(const OrientedGraph& g, int max_order,
                            const std::function<void(const std::vector<int>&,
                                                     const std::vector<std::int8_t>&)>& visit) {
  std::vector<int> path;
  std::vector<std::int8_t> signs;
  std::vector<bool> used(g.n(), false);
  std::function<void()> extend = [&] {
    if (path.size() >= 2) visit(path, signs);
    if (static_cast<int>(path.size()) == max_order) return;
    int head = path.back();
    for (int next_sign : {+1, -1}) {
      if (!signs.empty() && signs.back() == next_sign) continue;  // stay antidirected
      const auto& nbrs = next_sign == 1 ? g.out_neighbors(head) : g.in_neighbors(head);
      for (int v : nbrs) {
        if (used[v]) continue;
        used[v] = true;
        path.push_back(v);
        signs.push_back(static_cast<std::int8_t>(next_sign));
        extend();
        signs.pop_back();
        path.pop_back();
        used[v] = false;
      }
    }
  };
  for (int v = 0; v < g.n(); ++v) {
    used[v] = true;
    path.push_back(v);
    extend();
    path.pop_back();
    used[v] = false;
  }
}

}  // namespace

TEST_CASE("table sizes and minimum semidegree for 3 <= n <= 40") {
  for (int n = 3; n <= 40; ++n) {
    ExtremalInstance inst = build_extremal(n, 1);
    auto s = semidegree(inst.graph);
    CAPTURE(n);
    CHECK(s.min_semidegree == target_min_semidegree(n));
    ExtremalSizes sz = extremal_sizes(n);
    CHECK(inst.partition.size(SetId::W) == sz.w);
    CHECK(inst.partition.size(SetId::X) == sz.x);
    CHECK(inst.partition.size(SetId::Y) == sz.y);
    CHECK(inst.partition.size(SetId::Z) == sz.z);
    CHECK(sz.w + sz.x + sz.y + sz.z == n);
  }
}

TEST_CASE("spec rows: n = 9, 14, 8") {
  ExtremalInstance nine = build_extremal(9, 3);
  CHECK(nine.partition.size(SetId::W) == 2);
  CHECK(nine.partition.size(SetId::X) == 3);
  CHECK(nine.partition.size(SetId::Z) == 3);
  CHECK(nine.partition.size(SetId::Y) == 1);
  CHECK(semidegree(nine.graph).min_semidegree == 3);
  // W spans an almost regular tournament: 2 vertices, 1 edge
  auto sub = induced(nine.graph, nine.partition.set(SetId::W));
  CHECK(sub.graph.n() == 2);
  CHECK(sub.graph.edge_count() == 1);

  ExtremalInstance fourteen = build_extremal(14, 3);
  auto s = semidegree(fourteen.graph);
  CHECK(s.min_semidegree == 5);
  for (int v = 0; v < 14; ++v) {
    CHECK(s.out[v] == 5);  // (3n-2)/8-regular
    CHECK(s.in[v] == 5);
  }

  ExtremalInstance eight = build_extremal(8, 3);
  for (SetId j : {SetId::W, SetId::X, SetId::Y, SetId::Z})
    CHECK(eight.partition.size(j) == 2);
  CHECK(semidegree(eight.graph).min_semidegree == 2);
}

TEST_CASE("construction is seed-deterministic and n < 3 rejected") {
  CHECK(build_extremal(17, 9).graph.edges() == build_extremal(17, 9).graph.edges());
  CHECK_THROWS_AS(build_extremal(2, 0), InputError);
}

TEST_CASE("every antidirected path of order <= 5 in the n=8 instance is confined") {
  ExtremalInstance inst = build_extremal(8, 5);
  int checked = 0;
  enumerate_antidirected(inst.graph, 5, [&](const std::vector<int>& path,
                                            const std::vector<std::int8_t>& signs) {
    ConfinementVerdict v = confinement_check(inst, path, Pattern(signs));
    CHECK(v.cls != ConfinementClass::Neither);
    if (v.parity_checked) CHECK(v.parity_ok);
    ++checked;
  });
  CHECK(checked > 100);

  // both confinement classes are actually realized
  bool saw_wxz = false, saw_yxz = false;
  enumerate_antidirected(inst.graph, 4, [&](const std::vector<int>& path,
                                            const std::vector<std::int8_t>& signs) {
    ConfinementVerdict v = confinement_check(inst, path, Pattern(signs));
    saw_wxz = saw_wxz || v.cls == ConfinementClass::WXZ;
    saw_yxz = saw_yxz || v.cls == ConfinementClass::YXZ;
  });
  CHECK(saw_wxz);
  CHECK(saw_yxz);
}

TEST_CASE("confinement caps the longest antidirected path in the n=8 instance") {
  // every antidirected path lives inside W u X u Z or Y u X u Z, both of
  // which have 6 vertices here, so no antidirected path can reach order 7
  ExtremalInstance inst = build_extremal(8, 3);
  int longest = 1;
  enumerate_antidirected(inst.graph, 8, [&](const std::vector<int>& path,
                                            const std::vector<std::int8_t>&) {
    longest = std::max<int>(longest, static_cast<int>(path.size()));
  });
  CHECK(longest <= 6);
  CHECK(longest >= 4);  // and the bound is not vacuous: real paths exist
}

TEST_CASE("a single W vertex is a confined out-path with good parity") {
  ExtremalInstance inst = build_extremal(8, 5);
  int w = inst.partition.set(SetId::W)[0];
  ConfinementVerdict v = confinement_check(inst, {w}, Pattern(std::vector<std::int8_t>{}));
  CHECK(v.cls == ConfinementClass::WXZ);
  CHECK(v.parity_checked);
  CHECK(v.parity_ok);
}

TEST_CASE("confinement_check rejects bad input") {
  ExtremalInstance inst = build_extremal(8, 5);
  // find a directed 2-path to build a non-antidirected 3-path
  int a = -1, b = -1, c = -1;
  for (int u = 0; u < 8 && a < 0; ++u)
    for (int v : inst.graph.out_neighbors(u)) {
      for (int w : inst.graph.out_neighbors(v))
        if (w != u) {
          a = u;
          b = v;
          c = w;
          break;
        }
      if (a >= 0) break;
    }
  REQUIRE(a >= 0);
  CHECK_THROWS_AS(confinement_check(inst, {a, b, c}, Pattern::parse("++")), InputError);
  CHECK_THROWS_AS(confinement_check(inst, {0, 1}, Pattern::parse("+-")), InputError);
}

TEST_CASE("special edges") {
  SUBCASE("the natural partition of n=14 has none") {
    ExtremalInstance inst = build_extremal(14, 1);
    CHECK(find_special_edges(inst.graph, inst.partition).empty());
    CHECK(disjoint_special_edges(inst.graph, inst.partition).count == 0);
  }
  SUBCASE("an edge inside X is special by definition") {
    ExtremalInstance inst = build_extremal(16, 1);
    auto xs = inst.partition.set(SetId::X);
    inst.graph.add_edge(xs[0], xs[1]);
    auto edges = find_special_edges(inst.graph, inst.partition);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0] == std::pair<int, int>{xs[0], xs[1]});
  }
  SUBCASE("flipping one X->Y edge to Y->X yields exactly that special edge") {
    ExtremalInstance inst = build_extremal(9, 1);
    int x = inst.partition.set(SetId::X)[0];
    int y = inst.partition.set(SetId::Y)[0];
    inst.graph.remove_edge(x, y);
    inst.graph.add_edge(y, x);
    auto edges = find_special_edges(inst.graph, inst.partition);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0] == std::pair<int, int>{y, x});
  }
}

TEST_CASE("disjoint special edges") {
  SUBCASE("two disjoint edges inside X") {
    ExtremalInstance inst = build_extremal(40, 1);
    auto xs = inst.partition.set(SetId::X);
    inst.graph.add_edge(xs[0], xs[1]);
    inst.graph.add_edge(xs[2], xs[3]);
    auto d = disjoint_special_edges(inst.graph, inst.partition);
    CHECK(d.count == 2);
    CHECK(d.witness.size() == 2);
  }
  SUBCASE("a star through one vertex caps at 1") {
    ExtremalInstance inst = build_extremal(40, 1);
    auto xs = inst.partition.set(SetId::X);
    inst.graph.add_edge(xs[0], xs[1]);
    inst.graph.add_edge(xs[0], xs[2]);
    inst.graph.add_edge(xs[3], xs[0]);
    CHECK(disjoint_special_edges(inst.graph, inst.partition).count == 1);
  }
  SUBCASE("count is monotone under edge addition") {
    ExtremalInstance inst = build_extremal(22, 2);
    int last = disjoint_special_edges(inst.graph, inst.partition).count;
    CHECK(last == 0);
    auto xs = inst.partition.set(SetId::X);
    for (int i = 0; i + 1 < static_cast<int>(xs.size()); i += 2) {
      inst.graph.add_edge(xs[i], xs[i + 1]);
      int now = disjoint_special_edges(inst.graph, inst.partition).count;
      CHECK(now >= last);
      last = now;
    }
  }
}

TEST_CASE("exceptional-structure detection") {
  SUBCASE("the generated exception is recognized at its planted vertex") {
    for (std::uint64_t seed : {1, 2}) {
      OrientedGraph g = build_exceptional(1, seed);  // n = 11
      CHECK(semidegree(g).min_semidegree == 4);      // 3s+1
      auto v = is_exceptional(g);
      REQUIRE(v.has_value());
      CHECK(*v == 10);
    }
  }
  SUBCASE("n=19 instance as well") {
    OrientedGraph g = build_exceptional(2, 7);
    auto v = is_exceptional(g);
    REQUIRE(v.has_value());
    CHECK(*v == 18);
  }
  SUBCASE("removing a Y vertex of the 8s+3 construction leaves a family member") {
    ExtremalInstance inst = build_extremal(11, 1);
    auto v = is_exceptional(inst.graph);
    REQUIRE(v.has_value());
    CHECK(inst.partition.in(*v, SetId::Y));
  }
  SUBCASE("breaking the W tournament defeats every removal") {
    ExtremalInstance inst = build_extremal(11, 1);
    auto ws = inst.partition.set(SetId::W);
    if (inst.graph.has_edge(ws[0], ws[1]))
      inst.graph.remove_edge(ws[0], ws[1]);
    else
      inst.graph.remove_edge(ws[1], ws[0]);
    CHECK_FALSE(is_exceptional(inst.graph).has_value());
  }
  SUBCASE("the directed 11-cycle is not exceptional") {
    OrientedGraph g(11);
    for (int i = 0; i < 11; ++i) g.add_edge(i, (i + 1) % 11);
    CHECK_FALSE(is_exceptional(g).has_value());
  }
  SUBCASE("wrong residue returns nothing, oversized throws") {
    CHECK_FALSE(is_exceptional(build_extremal(12, 1).graph).has_value());
    OrientedGraph big(43);
    CHECK_THROWS_AS(is_exceptional(big), CapacityError);
  }
}

TEST_CASE("the exceptional graph pins every special edge to the extra vertex") {
  // wherever the extra vertex is placed, the partition has special edges but
  // never two disjoint ones, since they all run through that vertex
  OrientedGraph g = build_exceptional(1, 3);  // n = 11, extra vertex is 10
  ExtremalInstance base = build_extremal(10, 3);
  for (SetId home : {SetId::W, SetId::X, SetId::Y, SetId::Z}) {
    std::array<std::vector<int>, 4> sets;
    for (int j = 0; j < 4; ++j) sets[j] = base.partition.set(static_cast<SetId>(j));
    sets[static_cast<int>(home)].push_back(10);
    QuadPartition part(11, sets[0], sets[1], sets[2], sets[3]);
    auto d = disjoint_special_edges(g, part);
    CAPTURE(set_name(home));
    CHECK(d.count == 1);
    for (auto [u, v] : find_special_edges(g, part)) CHECK((u == 10 || v == 10));
  }
}

TEST_CASE("proper paths from special edges") {
  ExtremalInstance inst = build_extremal(40, 6);
  const auto& part = inst.partition;

  SUBCASE("a planted Y->W edge extends to a (W,Y)-proper 13-path") {
    int y = part.set(SetId::Y)[0];
    int w = part.set(SetId::W)[0];
    inst.graph.add_edge(y, w);  // in E(X u Y, W u X)
    auto path = extend_to_proper_path(inst.graph, part, {y, w}, {});
    REQUIRE(path.size() == 13);
    // antidirected out-path present in the graph
    for (int i = 0; i + 1 < 13; ++i) {
      if (i % 2 == 0)
        CHECK(inst.graph.has_edge(path[i], path[i + 1]));
      else
        CHECK(inst.graph.has_edge(path[i + 1], path[i]));
    }
    CHECK(part.in(path.front(), SetId::W));
    CHECK(part.in(path.back(), SetId::Y));
    CHECK(path[5] == w);  // v
    CHECK(path[6] == y);  // u
    for (int i : {0, 1, 2, 3}) CHECK(part.in(path[i], SetId::W));
    for (int i : {9, 10, 11, 12}) CHECK(part.in(path[i], SetId::Y));
    std::set<int> distinct(path.begin(), path.end());
    CHECK(distinct.size() == 13);
  }

  SUBCASE("a planted Z-internal edge uses the W u Z side table") {
    auto zs = part.set(SetId::Z);
    inst.graph.add_edge(zs[0], zs[1]);  // in E(W u Z, Y u Z)
    auto path = extend_to_proper_path(inst.graph, part, {zs[0], zs[1]}, {});
    REQUIRE(path.size() == 13);
    CHECK(part.in(path.front(), SetId::W));
    CHECK(part.in(path.back(), SetId::Y));
    CHECK(path[6] == zs[0]);
    CHECK(path[7] == zs[1]);
    for (int i = 0; i + 1 < 13; ++i) {
      if (i % 2 == 0)
        CHECK(inst.graph.has_edge(path[i], path[i + 1]));
      else
        CHECK(inst.graph.has_edge(path[i + 1], path[i]));
    }
  }

  SUBCASE("forbidding almost all of W starves the greedy") {
    int y = part.set(SetId::Y)[0];
    int w = part.set(SetId::W)[0];
    inst.graph.add_edge(y, w);
    std::vector<int> forbidden;
    const auto& ws = part.set(SetId::W);
    for (std::size_t i = 0; i < ws.size(); ++i)
      if (ws[i] != w && forbidden.size() + 2 < ws.size()) forbidden.push_back(ws[i]);
    CHECK_THROWS_AS(extend_to_proper_path(inst.graph, part, {y, w}, forbidden),
                    ConstructionError);
  }

  SUBCASE("a non-special edge is rejected") {
    int w = part.set(SetId::W)[0];
    int x = part.set(SetId::X)[0];
    REQUIRE(inst.graph.has_edge(w, x));
    CHECK_THROWS_AS(extend_to_proper_path(inst.graph, part, {w, x}, {}), InputError);
  }
}
