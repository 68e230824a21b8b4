#ifndef ORIENT_EXTREMAL_HPP
#define ORIENT_EXTREMAL_HPP

#include <optional>
#include <vector>

#include "orient/graph.hpp"
#include "orient/partition.hpp"
#include "orient/pattern.hpp"

namespace orient {

/// Row of the size table for the extremal family, keyed by n mod 8.
struct ExtremalSizes {
  int s = 0;
  int min_semidegree = 0;
  int w = 0, x = 0, y = 0, z = 0;
  int x1 = 0, x2 = 0;  ///< split of X (and Z) for the bipartite blow-up
};

/// Sizes and target minimum semidegree for order n (n >= 3).
ExtremalSizes extremal_sizes(int n);

struct ExtremalInstance {
  OrientedGraph graph;
  QuadPartition partition;
  int s = 0;
  int residue = 0;  ///< n mod 8, with 0 meaning the 8s+8 row
  std::vector<int> x1, x2, z1, z2;
};

/// The extremal construction: complete W->X->Y->Z->W, seeded almost regular
/// tournaments inside W and Y, and the bipartite tournament between X and Z
/// (rotational for n = 8s+1, the 4-cycle blow-up otherwise). The result has
/// delta0 = ceil((3n-1)/8) - 1 exactly.
ExtremalInstance build_extremal(int n, std::uint64_t seed);

enum class ConfinementClass { WXZ, YXZ, Neither };

struct ConfinementVerdict {
  ConfinementClass cls = ConfinementClass::Neither;
  bool parity_checked = false;  ///< true when the path is an out-path starting in W u Z
  bool parity_ok = false;       ///< odd positions in W u Z, even in W u X
};

/// Checks that an antidirected path stays inside W u X u Z or Y u X u Z.
/// `signs` carries one sign per path edge; the path must be antidirected and
/// present in the graph (InputError otherwise).
ConfinementVerdict confinement_check(const ExtremalInstance& inst, const std::vector<int>& path,
                                     const Pattern& signs);

/// All edges of G in E(W u Z, Y u Z) u E(X u Y, W u X), lexicographic.
std::vector<std::pair<int, int>> find_special_edges(const OrientedGraph& g,
                                                    const QuadPartition& partition);

struct DisjointSpecialEdges {
  int count = 0;  ///< 0, 1, or 2 (2 meaning at least two disjoint ones exist)
  std::vector<std::pair<int, int>> witness;
};

DisjointSpecialEdges disjoint_special_edges(const OrientedGraph& g,
                                            const QuadPartition& partition);

/// Returns the vertex v such that G - v lies in the order-(8s+2) extremal
/// family (any almost regular tournaments inside W and Y, the blow-up between
/// X and Z), or nullopt. Only defined for |G| = 8s+3; desk-scale cap |G| <= 35
/// (CapacityError above).
std::optional<int> is_exceptional(const OrientedGraph& g);

/// The order-(8s+3) oriented graph of the pancyclicity exception: the
/// extremal graph of order 8s+2 plus one vertex whose adjacencies are forced
/// by the degree-equality analysis. Requires s >= 1.
OrientedGraph build_exceptional(int s, std::uint64_t seed);

/// Extends a special edge to a (W,Y)-proper antidirected 13-path avoiding
/// `forbidden`: endpoints are good vertices of W and Y (goodness at the given
/// delta and C), interior picks avoid bad vertices. Throws InputError if the
/// edge is not special, ConstructionError naming the starved step if the
/// greedy runs out of candidates.
std::vector<int> extend_to_proper_path(const OrientedGraph& g, const QuadPartition& partition,
                                       std::pair<int, int> special_edge,
                                       const std::vector<int>& forbidden, double delta = 0.1,
                                       double C = 3.0);

}  // namespace orient

#endif
