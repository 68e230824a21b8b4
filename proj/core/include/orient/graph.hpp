#ifndef ORIENT_GRAPH_HPP
#define ORIENT_GRAPH_HPP

#include <cstdint>
#include <vector>

#include "orient/errors.hpp"

namespace orient {

/// Loop-free digraph with no 2-cycles. Vertices are 0..n-1. Edges are ordered
/// pairs (u,v) meaning u->v; for every unordered {u,v} at most one direction
/// is present. Adjacency is kept both as a dense direction matrix (O(1) edge
/// queries, the solver's hot loop) and as in/out lists (iteration).
///
/// Instances are mutated only while being built; afterwards they are safe to
/// share across threads.
class OrientedGraph {
 public:
  explicit OrientedGraph(int n);

  int n() const { return n_; }
  int edge_count() const { return edge_count_; }

  /// Throws InputError on out-of-range vertex, loop, duplicate edge, or a
  /// would-be 2-cycle; the diagnostic names the offending pair.
  void add_edge(int u, int v);

  /// Removes u->v (must be present).
  void remove_edge(int u, int v);

  bool has_edge(int u, int v) const { return dir_[idx(u, v)] != 0; }

  const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
  const std::vector<int>& in_neighbors(int v) const { return in_[v]; }
  int out_degree(int v) const { return static_cast<int>(out_[v].size()); }
  int in_degree(int v) const { return static_cast<int>(in_[v].size()); }

  std::vector<std::pair<int, int>> edges() const;

 private:
  std::size_t idx(int u, int v) const { return static_cast<std::size_t>(u) * n_ + v; }
  void check_vertex(int v) const;

  int n_;
  int edge_count_ = 0;
  std::vector<std::int8_t> dir_;
  std::vector<std::vector<int>> out_, in_;
};

struct DegreeSummary {
  std::vector<int> out;  ///< d+ per vertex
  std::vector<int> in;   ///< d- per vertex
  int min_out = 0;       ///< delta+
  int min_in = 0;        ///< delta-
  int min_semidegree = 0;  ///< delta0 = min over v of min(d+(v), d-(v))
};

DegreeSummary semidegree(const OrientedGraph& g);

struct InducedSubgraph {
  OrientedGraph graph;
  std::vector<int> vertex_map;  ///< new index -> original vertex
};

/// Subgraph induced by S, relabeled 0..|S|-1. Throws InputError if S contains
/// an out-of-range or repeated vertex.
InducedSubgraph induced(const OrientedGraph& g, const std::vector<int>& s);

/// (u,v) in reverse(g) iff (v,u) in g.
OrientedGraph reverse(const OrientedGraph& g);

/// Tournament in which |d+(v) - d-(v)| <= 1 for every v. Deterministic given
/// the seed: a seeded random tournament repaired by flipping edges along
/// surplus-to-deficit 2-paths until balanced.
OrientedGraph almost_regular_tournament(int n, std::uint64_t seed);

/// Oriented graph with delta0 >= min_semidegree. Requires
/// min_semidegree <= floor((n-1)/2) (InputError otherwise); throws
/// GenerationError if max_attempts runs out.
OrientedGraph random_oriented_graph(int n, int min_semidegree, std::uint64_t seed,
                                    int max_attempts = 16);

}  // namespace orient

#endif
