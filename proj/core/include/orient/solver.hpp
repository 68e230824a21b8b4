#ifndef ORIENT_SOLVER_HPP
#define ORIENT_SOLVER_HPP

#include <optional>
#include <string>
#include <vector>

#include "orient/graph.hpp"
#include "orient/pattern.hpp"

namespace orient {

struct CycleEmbedding {
  std::vector<int> vertices;  ///< v_1..v_t, distinct
  Pattern pattern;            ///< realized pattern (sign i on edge v_i v_{i+1})
};

/// Edge-by-edge check of an embedding against graph and pattern; independent
/// of any search bookkeeping.
bool validate_embedding(const OrientedGraph& g, const Pattern& p, const CycleEmbedding& emb);

enum class Verdict { Found, NonExistent, Indeterminate };

std::string to_string(Verdict v);

struct SearchResult {
  Verdict verdict = Verdict::NonExistent;
  std::optional<CycleEmbedding> embedding;
  long long nodes_expanded = 0;
};

/// Backtracking search for a t-cycle realizing p (t = |p|, 3 <= t <= |G|).
/// Branches over (anchor = minimum cycle vertex, rotation of p) with the
/// node-expansion budget split evenly across branches, so the verdict is
/// deterministic and independent of evaluation order (including the thread
/// count used to run the branches). Indeterminate is returned only when some
/// branch ran out of budget without a find.
SearchResult find_oriented_cycle(const OrientedGraph& g, const Pattern& p, long long budget = -1,
                                 int threads = 1);

/// find_oriented_cycle with |p| = |G| enforced.
SearchResult find_oriented_hamilton(const OrientedGraph& g, const Pattern& p,
                                    long long budget = -1, int threads = 1);

/// Independent brute-force oracle: for every t-subset, anchors the minimum
/// vertex, enumerates the remaining orderings once per traversal direction,
/// and tests all rotations of p plus its traversal reversal. |G| <= 11
/// (CapacityError above). Never indeterminate.
SearchResult oracle_enumerate(const OrientedGraph& g, const Pattern& p);

enum class CellStatus { Found, NotFound, Indeterminate, SkippedInfeasible };

struct SweepCell {
  int t = 0;
  std::string pattern;
  CellStatus status = CellStatus::NotFound;
  std::optional<CycleEmbedding> embedding;
  long long nodes_expanded = 0;
};

struct PancyclicityReport {
  int t_min = 0, t_max = 0;
  std::vector<SweepCell> cells;
};

/// Runs every canonical pattern of every length in [t_min, t_max]. For odd t
/// an extra antidirected cell (the alternating sign string, which cannot
/// close a cycle of odd order) is emitted as SkippedInfeasible without
/// search. Cells are independent; `threads` caps the worker count and the
/// report is identical for any value.
PancyclicityReport pancyclicity_sweep(const OrientedGraph& g, int t_min, int t_max,
                                      long long budget_per_query = -1, int threads = 1);

struct ThresholdRow {
  std::string pattern;
  int found = 0, not_found = 0, indeterminate = 0;
  bool oracle_consistent = true;  ///< only meaningful in oracle mode
};

struct ThresholdSummary {
  int n = 0, trials = 0;
  int min_semidegree = 0;     ///< the ceil((3n-1)/8) bound imposed on samples
  bool oracle_verified = false;  ///< cross-checked against oracle_enumerate
  std::vector<ThresholdRow> rows;  ///< one per canonical Hamilton pattern
};

/// Samples oriented graphs with delta0 >= ceil((3n-1)/8) and sweeps all
/// canonical Hamilton patterns. Oracle verification requires n <= 11 and is
/// on by default there.
ThresholdSummary threshold_experiment(int n, int trials, std::uint64_t seed,
                                      long long budget = -1, int threads = 1);

}  // namespace orient

#endif
