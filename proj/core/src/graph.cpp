#include "orient/graph.hpp"

#include <algorithm>
#include <string>

#include "orient/rng.hpp"

namespace orient {

OrientedGraph::OrientedGraph(int n) : n_(n) {
  if (n < 0) throw InputError("vertex count must be non-negative, got " + std::to_string(n));
  dir_.assign(static_cast<std::size_t>(n) * n, 0);
  out_.resize(n);
  in_.resize(n);
}

void OrientedGraph::check_vertex(int v) const {
  if (v < 0 || v >= n_)
    throw InputError("vertex " + std::to_string(v) + " out of range [0," + std::to_string(n_) + ")");
}

void OrientedGraph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  const std::string pair = "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  if (u == v) throw InputError("loop " + pair + " not allowed in an oriented graph");
  if (dir_[idx(u, v)]) throw InputError("duplicate edge " + pair);
  if (dir_[idx(v, u)])
    throw InputError("edge " + pair + " would create a 2-cycle with (" + std::to_string(v) + "," +
                     std::to_string(u) + ")");
  dir_[idx(u, v)] = 1;
  out_[u].push_back(v);
  in_[v].push_back(u);
  ++edge_count_;
}

void OrientedGraph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!dir_[idx(u, v)])
    throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") not present");
  dir_[idx(u, v)] = 0;
  out_[u].erase(std::find(out_[u].begin(), out_[u].end(), v));
  in_[v].erase(std::find(in_[v].begin(), in_[v].end(), u));
  --edge_count_;
}

std::vector<std::pair<int, int>> OrientedGraph::edges() const {
  std::vector<std::pair<int, int>> result;
  result.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v = 0; v < n_; ++v)
      if (dir_[idx(u, v)]) result.emplace_back(u, v);
  return result;
}

DegreeSummary semidegree(const OrientedGraph& g) {
  DegreeSummary s;
  const int n = g.n();
  s.out.resize(n);
  s.in.resize(n);
  s.min_out = n;
  s.min_in = n;
  s.min_semidegree = n;
  for (int v = 0; v < n; ++v) {
    s.out[v] = g.out_degree(v);
    s.in[v] = g.in_degree(v);
    s.min_out = std::min(s.min_out, s.out[v]);
    s.min_in = std::min(s.min_in, s.in[v]);
    s.min_semidegree = std::min(s.min_semidegree, std::min(s.out[v], s.in[v]));
  }
  if (n == 0) s.min_out = s.min_in = s.min_semidegree = 0;
  return s;
}

InducedSubgraph induced(const OrientedGraph& g, const std::vector<int>& s) {
  std::vector<int> to_new(g.n(), -1);
  for (std::size_t i = 0; i < s.size(); ++i) {
    int v = s[i];
    if (v < 0 || v >= g.n())
      throw InputError("induced: vertex " + std::to_string(v) + " out of range");
    if (to_new[v] != -1) throw InputError("induced: vertex " + std::to_string(v) + " repeated");
    to_new[v] = static_cast<int>(i);
  }
  InducedSubgraph result{OrientedGraph(static_cast<int>(s.size())), s};
  for (std::size_t i = 0; i < s.size(); ++i)
    for (int w : g.out_neighbors(s[i]))
      if (to_new[w] != -1) result.graph.add_edge(static_cast<int>(i), to_new[w]);
  return result;
}

OrientedGraph reverse(const OrientedGraph& g) {
  OrientedGraph r(g.n());
  for (auto [u, v] : g.edges()) r.add_edge(v, u);
  return r;
}

namespace {

// Direction matrix of a tournament under construction; dir[u][v] true means
// u->v. Kept separate from OrientedGraph so repairs can flip edges freely.
struct TournamentBuf {
  int n;
  std::vector<std::int8_t> dir;
  std::vector<int> outdeg;

  explicit TournamentBuf(int n_) : n(n_), dir(static_cast<std::size_t>(n_) * n_, 0), outdeg(n_, 0) {}
  bool has(int u, int v) const { return dir[static_cast<std::size_t>(u) * n + v] != 0; }
  void set(int u, int v) {
    dir[static_cast<std::size_t>(u) * n + v] = 1;
    ++outdeg[u];
  }
  void flip(int u, int v) {  // u->v becomes v->u
    dir[static_cast<std::size_t>(u) * n + v] = 0;
    dir[static_cast<std::size_t>(v) * n + u] = 1;
    --outdeg[u];
    ++outdeg[v];
  }
  // d+ - d- = 2*outdeg - (n-1)
  int surplus(int v) const { return 2 * outdeg[v] - (n - 1); }
};

// Flips edges until |d+ - d-| <= 1 everywhere. Termination: each step moves
// one unit of surplus from the most out-heavy vertex to the most in-heavy
// one, strictly decreasing sum |surplus|.
void balance(TournamentBuf& t) {
  const int n = t.n;
  for (;;) {
    int hi = 0, lo = 0;
    for (int v = 0; v < n; ++v) {
      if (t.surplus(v) > t.surplus(hi)) hi = v;
      if (t.surplus(v) < t.surplus(lo)) lo = v;
    }
    if (t.surplus(hi) <= 1 && t.surplus(lo) >= -1) return;
    if (t.has(hi, lo)) {
      t.flip(hi, lo);
      continue;
    }
    // lo->hi present: reroute through some w with hi->w and w->lo. Such w
    // exists because |N+(hi)| + |N-(lo)| > n-1 within V \ {hi, lo}.
    for (int w = 0; w < n; ++w) {
      if (w != hi && w != lo && t.has(hi, w) && t.has(w, lo)) {
        t.flip(hi, w);
        t.flip(w, lo);
        break;
      }
    }
  }
}

TournamentBuf random_balanced_tournament(int n, Rng& rng) {
  TournamentBuf t(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (rng.coin())
        t.set(u, v);
      else
        t.set(v, u);
    }
  balance(t);
  return t;
}

OrientedGraph to_graph(const TournamentBuf& t) {
  OrientedGraph g(t.n);
  for (int u = 0; u < t.n; ++u)
    for (int v = 0; v < t.n; ++v)
      if (t.has(u, v)) g.add_edge(u, v);
  return g;
}

}  // namespace

OrientedGraph almost_regular_tournament(int n, std::uint64_t seed) {
  if (n < 1) throw InputError("almost_regular_tournament: n must be >= 1");
  Rng rng(seed);
  TournamentBuf t = random_balanced_tournament(n, rng);
  return to_graph(t);
}

OrientedGraph random_oriented_graph(int n, int min_semidegree, std::uint64_t seed,
                                    int max_attempts) {
  if (n < 1) throw InputError("random_oriented_graph: n must be >= 1");
  if (min_semidegree < 0) throw InputError("random_oriented_graph: min_semidegree must be >= 0");
  if (min_semidegree > (n - 1) / 2)
    throw InputError("random_oriented_graph: min_semidegree " + std::to_string(min_semidegree) +
                     " infeasible for n=" + std::to_string(n) + " (max " +
                     std::to_string((n - 1) / 2) + ")");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    // A balanced tournament has delta0 = floor((n-1)/2) >= min_semidegree;
    // deleting random edges that respect the bound diversifies density.
    TournamentBuf t = random_balanced_tournament(n, rng);
    OrientedGraph g = to_graph(t);
    std::vector<int> outdeg(n), indeg(n);
    for (int v = 0; v < n; ++v) {
      outdeg[v] = g.out_degree(v);
      indeg[v] = g.in_degree(v);
    }
    auto edge_list = g.edges();
    int deletions = static_cast<int>(rng.below(static_cast<std::uint64_t>(edge_list.size()) + 1));
    for (int d = 0; d < deletions && !edge_list.empty(); ++d) {
      std::size_t pick = rng.below(edge_list.size());
      auto [u, v] = edge_list[pick];
      if (outdeg[u] > min_semidegree && indeg[v] > min_semidegree) {
        g.remove_edge(u, v);
        --outdeg[u];
        --indeg[v];
      }
      edge_list[pick] = edge_list.back();
      edge_list.pop_back();
    }
    if (semidegree(g).min_semidegree >= min_semidegree) return g;
  }
  throw GenerationError("random_oriented_graph: no graph with delta0 >= " +
                        std::to_string(min_semidegree) + " after " + std::to_string(max_attempts) +
                        " attempts");
}

}  // namespace orient
