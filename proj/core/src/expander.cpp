#include "orient/expander.hpp"

#include <algorithm>
#include <bit>
#include "orient/parallel.hpp"
#include <cmath>
#include <queue>
#include <set>

#include "orient/rng.hpp"

namespace orient {

std::vector<int> robust_outneighborhood(const OrientedGraph& g, const std::vector<int>& s,
                                        double nu) {
  std::vector<bool> in_s(g.n(), false);
  for (int v : s) {
    if (v < 0 || v >= g.n())
      throw InputError("robust_outneighborhood: vertex " + std::to_string(v) + " out of range");
    in_s[v] = true;
  }
  // "at least nu*n inneighbors" read strictly: threshold ceil(nu*n)
  const int threshold = std::max<int>(0, static_cast<int>(std::ceil(nu * g.n() - 1e-9)));
  std::vector<int> result;
  for (int v = 0; v < g.n(); ++v) {
    int count = 0;
    for (int u : g.in_neighbors(v)) count += in_s[u];
    if (count >= threshold) result.push_back(v);
  }
  return result;
}

namespace {

std::vector<int> mask_to_set(std::uint32_t mask, int n) {
  std::vector<int> s;
  for (int v = 0; v < n; ++v)
    if (mask >> v & 1) s.push_back(v);
  return s;
}

}  // namespace

ExpanderVerdict is_robust_outexpander(const OrientedGraph& g, double nu, double tau,
                                      ExpanderMode mode, long long sample_budget,
                                      std::uint64_t seed, const QuadPartition* hint,
                                      int threads) {
  const int n = g.n();
  if (nu <= 0 || tau <= 0 || nu > tau || tau >= 1)
    throw InputError("is_robust_outexpander: need 0 < nu <= tau < 1");

  ExpanderVerdict verdict;
  verdict.nu = nu;
  verdict.tau = tau;
  verdict.mode = mode;

  const int threshold = std::max<int>(0, static_cast<int>(std::ceil(nu * g.n() - 1e-9)));
  const double lo = tau * n, hi = (1 - tau) * n;
  std::vector<std::uint32_t> in_mask(n, 0);
  if (n <= 32) {
    for (int v = 0; v < n; ++v)
      for (int u : g.in_neighbors(v)) in_mask[v] |= 1u << u;
  }

  auto expands_mask = [&](std::uint32_t mask) {
    int size = std::popcount(mask);
    int rn = 0;
    for (int v = 0; v < n; ++v)
      if (std::popcount(in_mask[v] & mask) >= threshold) ++rn;
    return rn >= size + static_cast<int>(std::ceil(nu * n - 1e-9));
  };

  if (mode == ExpanderMode::Exhaustive) {
    if (n > 22) throw CapacityError("is_robust_outexpander: exhaustive mode capped at n <= 22");
    // chunked enumeration with a fixed chunk count: each chunk stops at its
    // own first witness, the merge keeps the minimal failing mask, and both
    // the witness and the tested count come out identical for every thread
    // count
    const std::uint64_t total = 1ULL << n;
    const int chunks = 64;
    const std::uint64_t span = (total + chunks - 1) / chunks;
    std::vector<std::uint64_t> chunk_witness(chunks, 0);
    std::vector<long long> chunk_tested(chunks, 0);
    parallel_for(chunks, threads, [&](int c) {
      std::uint64_t begin = std::max<std::uint64_t>(1, c * span);
      std::uint64_t end = std::min(total, (c + 1) * span);
      for (std::uint64_t mask = begin; mask < end; ++mask) {
        int size = std::popcount(mask);
        if (size <= lo || size >= hi) continue;
        ++chunk_tested[c];
        if (!expands_mask(static_cast<std::uint32_t>(mask))) {
          chunk_witness[c] = mask;
          return;
        }
      }
    });
    for (int c = 0; c < chunks; ++c) {
      verdict.tested += chunk_tested[c];
      if (chunk_witness[c] != 0 && !verdict.witness) {
        verdict.is_expander = false;
        verdict.witness = mask_to_set(static_cast<std::uint32_t>(chunk_witness[c]), n);
      }
    }
    verdict.is_expander = !verdict.witness.has_value();
    return verdict;
  }

  // Sampled mode: structured candidates first (pairwise unions of the hint's
  // classes), then random sets. Non-certifying by design.
  auto test_set = [&](const std::vector<int>& s) -> bool {
    if (s.size() <= lo || s.size() >= hi) return true;
    ++verdict.tested;
    auto rn = robust_outneighborhood(g, s, nu);
    return static_cast<int>(rn.size()) >=
           static_cast<int>(s.size()) + static_cast<int>(std::ceil(nu * n - 1e-9));
  };
  if (hint != nullptr) {
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) {
        auto s = hint->set_union(static_cast<SetId>(a), static_cast<SetId>(b));
        if (!test_set(s)) {
          verdict.witness = s;
          return verdict;
        }
      }
  }
  Rng rng(seed);
  const int min_size = static_cast<int>(std::floor(lo)) + 1;
  const int max_size = static_cast<int>(std::ceil(hi)) - 1;
  for (long long i = 0; i < sample_budget && min_size <= max_size; ++i) {
    int size = min_size + rng.below_int(max_size - min_size + 1);
    std::vector<int> pool(n);
    for (int v = 0; v < n; ++v) pool[v] = v;
    for (int j = 0; j < size; ++j) std::swap(pool[j], pool[j + rng.below_int(n - j)]);
    std::vector<int> s(pool.begin(), pool.begin() + size);
    std::sort(s.begin(), s.end());
    if (!test_set(s)) {
      verdict.witness = s;
      return verdict;
    }
  }
  verdict.is_expander = true;
  verdict.vacuous = verdict.tested == 0;
  return verdict;
}

QuadPartition partition_from_witness(const OrientedGraph& g, const std::vector<int>& s,
                                     double nu) {
  std::vector<bool> in_s(g.n(), false);
  for (int v : s) in_s[v] = true;
  std::vector<bool> in_rn(g.n(), false);
  for (int v : robust_outneighborhood(g, s, nu)) in_rn[v] = true;
  std::vector<int> w, x, y, z;
  for (int v = 0; v < g.n(); ++v) {
    if (in_rn[v] && in_s[v])
      w.push_back(v);
    else if (in_rn[v])
      x.push_back(v);
    else if (in_s[v])
      z.push_back(v);
    else
      y.push_back(v);
  }
  return QuadPartition(g.n(), w, x, y, z);
}

// ---------------------------------------------------------------------------
// EP1-EP7
// ---------------------------------------------------------------------------

namespace {

int degree_into(const OrientedGraph& g, int v, const std::vector<bool>& set, bool out) {
  int d = 0;
  for (int u : out ? g.out_neighbors(v) : g.in_neighbors(v)) d += set[u];
  return d;
}

std::vector<bool> set_flags(int n, const std::vector<int>& s) {
  std::vector<bool> f(n, false);
  for (int v : s) f[v] = true;
  return f;
}

// Smallest C such that #{v : deficit_v > C*dn} <= C*dn, for dn = delta*n.
double min_c_for_counted(std::vector<double> deficits, double dn) {
  std::sort(deficits.begin(), deficits.end(), std::greater<>());
  double best = deficits.empty() ? 0.0 : deficits[0] / dn;  // k = 0
  for (std::size_t k = 1; k <= deficits.size(); ++k) {
    double need_count = static_cast<double>(k) / dn;
    double need_deficit = k < deficits.size() ? deficits[k] / dn : 0.0;
    best = std::min(best, std::max(need_count, need_deficit));
  }
  return std::max(0.0, best);
}

}  // namespace

std::vector<bool> good_vertices(const OrientedGraph& g, const QuadPartition& partition,
                                double delta, double C) {
  const int n = g.n();
  const double slack = C * delta * n;
  std::array<std::vector<bool>, 4> flags;
  for (int j = 0; j < 4; ++j) flags[j] = set_flags(n, partition.set(static_cast<SetId>(j)));
  std::vector<bool> good(n, true);
  for (int v = 0; v < n; ++v) {
    SetId j = partition.label(v);
    SetId succ = successor(j), pred = predecessor(j);
    double need_succ = partition.size(succ) - slack;
    double need_pred = partition.size(pred) - slack;
    bool ok = degree_into(g, v, flags[static_cast<int>(succ)], true) >= need_succ &&
              degree_into(g, v, flags[static_cast<int>(pred)], false) >= need_pred;
    if (j == SetId::W || j == SetId::Y) {
      double need = partition.size(j) / 2.0 - slack;
      ok = ok && degree_into(g, v, flags[static_cast<int>(j)], true) >= need &&
           degree_into(g, v, flags[static_cast<int>(j)], false) >= need;
    }
    if (j == SetId::Z) {
      double need = partition.size(SetId::X) / 2.0 - slack;
      ok = ok && degree_into(g, v, flags[static_cast<int>(SetId::X)], true) >= need &&
           degree_into(g, v, flags[static_cast<int>(SetId::X)], false) >= need;
    }
    good[v] = ok;
  }
  return good;
}

EPReport check_extremal_partition(const OrientedGraph& g, const QuadPartition& partition,
                                  double delta, double C) {
  if (partition.n() != g.n()) throw InputError("check_extremal_partition: size mismatch");
  if (delta <= 0 || C < 0) throw InputError("check_extremal_partition: need delta > 0, C >= 0");
  const int n = g.n();
  const double dn = delta * n;

  EPReport report;
  report.delta = delta;
  report.C = C;

  std::array<std::vector<bool>, 4> flags;
  for (int j = 0; j < 4; ++j) flags[j] = set_flags(n, partition.set(static_cast<SetId>(j)));
  auto union_flags = [&](SetId a, SetId b) {
    std::vector<bool> f = flags[static_cast<int>(a)];
    for (int v = 0; v < n; ++v) f[v] = f[v] || flags[static_cast<int>(b)][v];
    return f;
  };

  // EP1: |J| = n/4 +- C*delta*n
  {
    double worst = 0;
    for (int j = 0; j < 4; ++j)
      worst = std::max(worst, std::abs(partition.size(static_cast<SetId>(j)) - n / 4.0));
    report.prop[0].min_passing_c = worst / dn;
  }
  // EP2: e(W u Z, Y u Z) <= C*delta*n^2
  {
    auto from = union_flags(SetId::W, SetId::Z);
    auto to = union_flags(SetId::Y, SetId::Z);
    long long e = 0;
    for (int v = 0; v < n; ++v)
      if (from[v]) e += degree_into(g, v, to, true);
    report.prop[1].min_passing_c = static_cast<double>(e) / (dn * n);
  }
  // EP3: per class and sign, all but C*delta*n vertices reach |J^sigma| - C*delta*n
  {
    double worst = 0;
    for (int j = 0; j < 4; ++j) {
      SetId id = static_cast<SetId>(j);
      for (bool out : {true, false}) {
        SetId target = out ? successor(id) : predecessor(id);
        std::vector<double> deficits;
        for (int v : partition.set(id)) {
          int d = degree_into(g, v, flags[static_cast<int>(target)], out);
          deficits.push_back(std::max(0.0, static_cast<double>(partition.size(target) - d)));
        }
        worst = std::max(worst, min_c_for_counted(std::move(deficits), dn));
      }
    }
    report.prop[2].min_passing_c = worst;
  }
  // EP4: inside W and Y, all but C*delta*n vertices have d+- >= |J|/2 - C*delta*n
  {
    double worst = 0;
    for (SetId id : {SetId::W, SetId::Y}) {
      std::vector<double> deficits;
      for (int v : partition.set(id)) {
        double half = partition.size(id) / 2.0;
        double deficit = std::max(half - degree_into(g, v, flags[static_cast<int>(id)], true),
                                  half - degree_into(g, v, flags[static_cast<int>(id)], false));
        deficits.push_back(std::max(0.0, deficit));
      }
      worst = std::max(worst, min_c_for_counted(std::move(deficits), dn));
    }
    report.prop[3].min_passing_c = worst;
  }
  // EP5: all but C*delta*n vertices of Z have d+-(v, X) >= |X|/2 - C*delta*n
  {
    std::vector<double> deficits;
    double half = partition.size(SetId::X) / 2.0;
    for (int v : partition.set(SetId::Z)) {
      double deficit =
          std::max(half - degree_into(g, v, flags[static_cast<int>(SetId::X)], true),
                   half - degree_into(g, v, flags[static_cast<int>(SetId::X)], false));
      deficits.push_back(std::max(0.0, deficit));
    }
    report.prop[4].min_passing_c = min_c_for_counted(std::move(deficits), dn);
  }
  // EP6 / EP7: every vertex, n/50 - C*delta*n lower bounds (n/50 literal)
  {
    double worst6 = 0, worst7 = 0;
    for (SetId id : {SetId::W, SetId::Y}) {
      for (bool out : {true, false}) {
        SetId step = out ? successor(id) : predecessor(id);
        auto target = union_flags(id, step);
        for (int v : partition.set(id)) {
          double deficit = n / 50.0 - degree_into(g, v, target, out);
          worst6 = std::max(worst6, deficit / dn);
        }
      }
    }
    for (SetId id : {SetId::X, SetId::Z}) {
      for (bool out : {true, false}) {
        SetId step = out ? successor(id) : predecessor(id);
        SetId step2 = out ? successor(step) : predecessor(step);
        auto target = union_flags(step, step2);
        for (int v : partition.set(id)) {
          double deficit = n / 50.0 - degree_into(g, v, target, out);
          worst7 = std::max(worst7, deficit / dn);
        }
      }
    }
    report.prop[5].min_passing_c = std::max(0.0, worst6);
    report.prop[6].min_passing_c = std::max(0.0, worst7);
  }

  report.all_pass = true;
  for (auto& prop : report.prop) {
    prop.pass = prop.min_passing_c <= C + 1e-12;
    report.all_pass = report.all_pass && prop.pass;
  }
  report.good = good_vertices(g, partition, delta, C);
  for (bool b : report.good) report.bad_count += !b;
  return report;
}

// ---------------------------------------------------------------------------
// Maximum matching (general graphs; E(X u Y, W u X) is not bipartite since X
// can appear on both sides). Classic blossom contraction.
// ---------------------------------------------------------------------------

namespace {

class BlossomMatcher {
 public:
  explicit BlossomMatcher(int n) : n_(n), adj_(n), match_(n, -1), parent_(n), base_(n) {}

  void add_edge(int u, int v) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  std::vector<int> solve() {
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1) augment_from(v);
    return match_;
  }

 private:
  int lca(int a, int b) {
    std::vector<bool> seen(n_, false);
    for (;;) {
      a = base_[a];
      seen[a] = true;
      if (match_[a] == -1) break;
      a = parent_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child, std::vector<bool>& in_blossom) {
    while (base_[v] != b) {
      in_blossom[base_[v]] = true;
      in_blossom[base_[match_[v]]] = true;
      parent_[v] = child;
      child = match_[v];
      v = parent_[match_[v]];
    }
  }

  bool augment_from(int root) {
    std::vector<bool> used(n_, false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
          int cur_base = lca(v, to);
          std::vector<bool> in_blossom(n_, false);
          mark_path(v, cur_base, to, in_blossom);
          mark_path(to, cur_base, v, in_blossom);
          for (int i = 0; i < n_; ++i)
            if (in_blossom[base_[i]]) {
              base_[i] = cur_base;
              if (!used[i]) {
                used[i] = true;
                q.push(i);
              }
            }
        } else if (parent_[to] == -1) {
          parent_[to] = v;
          if (match_[to] == -1) {
            for (int u = to; u != -1;) {
              int pv = parent_[u], ppv = match_[pv];
              match_[u] = pv;
              match_[pv] = u;
              u = ppv;
            }
            return true;
          }
          used[match_[to]] = true;
          q.push(match_[to]);
        }
      }
    }
    return false;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
};

}  // namespace

MatchingReport find_matching_xy_wx(const OrientedGraph& g, const QuadPartition& partition) {
  if (partition.size(SetId::X) < partition.size(SetId::Z))
    throw InputError(
        "find_matching_xy_wx: |X| < |Z|; reverse the graph and swap W<->Y, X<->Z first");
  MatchingReport report;
  report.required = partition.size(SetId::X) - partition.size(SetId::Z);

  BlossomMatcher matcher(g.n());
  std::set<std::pair<int, int>> present;
  for (int u = 0; u < g.n(); ++u) {
    SetId a = partition.label(u);
    if (a != SetId::X && a != SetId::Y) continue;
    for (int v : g.out_neighbors(u)) {
      SetId b = partition.label(v);
      if (b != SetId::W && b != SetId::X) continue;
      matcher.add_edge(u, v);
      present.insert({u, v});
    }
  }
  std::vector<int> match = matcher.solve();
  for (int u = 0; u < g.n(); ++u) {
    int v = match[u];
    if (v == -1 || v < u) continue;  // each matched pair once
    if (present.count({u, v}))
      report.edges.emplace_back(u, v);
    else
      report.edges.emplace_back(v, u);
  }
  std::sort(report.edges.begin(), report.edges.end());
  report.sufficient = static_cast<int>(report.edges.size()) >= report.required;
  return report;
}

// ---------------------------------------------------------------------------
// Balanced path systems
// ---------------------------------------------------------------------------

namespace {

const SetId W = SetId::W, X = SetId::X, Y = SetId::Y, Z = SetId::Z;

// Directed-path form templates from the balanced-system construction. The
// joined path P_u (7 vertices, ending at u) + edge + P_v (6, starting at v)
// always uses one more X- than Z-vertex.
std::vector<std::vector<SetId>> head_forms(SetId of_u) {
  if (of_u == X) return {{W, W, X, Y, Z, W}, {W, W, W, X, Y, Z}};  // + u itself
  return {{W, W, W, W, X, Y}, {W, X, Y, Z, W, X}};                 // u in Y
}

std::vector<std::vector<SetId>> tail_forms(SetId of_v) {
  if (of_v == W) return {{W, X, Y, Z, W}, {X, Y, Z, W, W}};  // after v itself
  return {{Y, Z, W, W, W}, {Z, W, W, W, W}};                 // v in X
}

}  // namespace

PathSystem find_balanced_path_system(const OrientedGraph& g, const QuadPartition& partition,
                                     const std::vector<std::pair<int, int>>& matching,
                                     double delta, double C) {
  const int required = partition.size(SetId::X) - partition.size(SetId::Z);
  if (static_cast<int>(matching.size()) != required)
    throw InputError("find_balanced_path_system: matching size " +
                     std::to_string(matching.size()) + " != |X| - |Z| = " +
                     std::to_string(required));
  std::vector<bool> used(g.n(), false);
  for (auto [u, v] : matching) {
    if (!g.has_edge(u, v)) throw InputError("find_balanced_path_system: matching edge absent");
    SetId a = partition.label(u), b = partition.label(v);
    if (!((a == X || a == Y) && (b == W || b == X)))
      throw InputError("find_balanced_path_system: matching edge outside E(X u Y, W u X)");
    if (used[u] || used[v]) throw InputError("find_balanced_path_system: not a matching");
    used[u] = used[v] = true;
  }
  std::vector<bool> good = good_vertices(g, partition, delta, C);

  PathSystem system;
  for (auto [u, v] : matching) {
    // grow backwards from u through a head form, forwards from v through a
    // tail form; every pick is an unused good vertex
    auto try_form = [&](const std::vector<SetId>& form, int from, bool backwards,
                        std::vector<int>& out_path) {
      std::vector<int> picked;
      int prev = from;
      for (std::size_t i = 0; i < form.size(); ++i) {
        SetId want = backwards ? form[form.size() - 1 - i] : form[i];
        const auto& nbrs = backwards ? g.in_neighbors(prev) : g.out_neighbors(prev);
        std::vector<int> cands(nbrs.begin(), nbrs.end());
        std::sort(cands.begin(), cands.end());
        int chosen = -1;
        for (int c : cands)
          if (!used[c] && good[c] && partition.in(c, want)) {
            chosen = c;
            break;
          }
        if (chosen == -1) {
          for (int c : picked) used[c] = false;
          return false;
        }
        used[chosen] = true;
        picked.push_back(chosen);
        prev = chosen;
      }
      out_path = picked;
      return true;
    };

    std::vector<int> head, tail;
    bool ok = false;
    for (const auto& hf : head_forms(partition.label(u))) {
      if (!try_form(hf, u, true, head)) continue;
      for (const auto& tf : tail_forms(partition.label(v))) {
        if (try_form(tf, v, false, tail)) {
          ok = true;
          break;
        }
      }
      if (ok) break;
      for (int c : head) used[c] = false;
    }
    if (!ok)
      throw ConstructionError("find_balanced_path_system: starved while extending edge (" +
                              std::to_string(u) + "," + std::to_string(v) + ")");
    std::vector<int> path(head.rbegin(), head.rend());
    path.push_back(u);
    path.push_back(v);
    path.insert(path.end(), tail.begin(), tail.end());
    system.paths.push_back(std::move(path));
  }
  return system;
}

std::string validate_path_system(const OrientedGraph& g, const QuadPartition& partition,
                                 const std::vector<std::pair<int, int>>& matching,
                                 const PathSystem& system, double delta, double C) {
  if (system.paths.size() != matching.size()) return "path count != matching size";
  std::vector<bool> good = good_vertices(g, partition, delta, C);
  std::vector<bool> seen(g.n(), false);
  for (const auto& path : system.paths) {
    if (path.size() != 13) return "path order != 13";
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!g.has_edge(path[i], path[i + 1])) return "path not directed in G";
    for (int v : path) {
      if (seen[v]) return "paths not disjoint";
      seen[v] = true;
    }
    if (!partition.in(path.front(), SetId::W) || !good[path.front()]) return "start not a good W vertex";
    if (!partition.in(path.back(), SetId::W) || !good[path.back()]) return "end not a good W vertex";
    int x_count = 0, z_count = 0;
    for (int v : path) {
      x_count += partition.in(v, SetId::X);
      z_count += partition.in(v, SetId::Z);
    }
    if (x_count != z_count + 1) return "path does not reduce |X|-|Z| by one";
  }
  for (auto [u, v] : matching) {
    bool contained = false;
    for (const auto& path : system.paths)
      for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (path[i] == u && path[i + 1] == v) contained = true;
    if (!contained) return "matching edge not contained in any path";
  }
  long long x_left = partition.size(SetId::X), z_left = partition.size(SetId::Z);
  for (const auto& path : system.paths)
    for (int v : path) {
      x_left -= partition.in(v, SetId::X);
      z_left -= partition.in(v, SetId::Z);
    }
  if (x_left != z_left) return "|X \\ V(P)| != |Z \\ V(P)|";
  return "";
}

}  // namespace orient
