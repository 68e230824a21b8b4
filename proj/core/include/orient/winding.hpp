#ifndef ORIENT_WINDING_HPP
#define ORIENT_WINDING_HPP

#include <cstdint>
#include <vector>

#include "orient/pattern.hpp"

namespace orient {

/// The cluster cycle F = V_1 V_2 ... V_k V_1 of a reduced digraph.
struct ReducedCycle {
  int k = 3;
};

struct WindingResult {
  std::vector<std::vector<int>> assignment;  ///< per path, the cluster of each vertex
  std::vector<long long> load;               ///< a(i): vertices assigned to cluster i
};

/// Randomized winding: each path's initial vertex lands on a uniformly random
/// cluster; every further vertex moves to the successor cluster on a forward
/// edge and to the predecessor on a backward one. Only start clusters are
/// random. A path with e signs has e+1 vertices. Deterministic given seed.
WindingResult wind_paths(const ReducedCycle& f, const std::vector<Pattern>& paths,
                         std::uint64_t seed);

struct PathSpecGroup {
  int count = 0;
  int order = 0;            ///< vertices per path
  bool alternating = false; ///< antidirected instead of directed
};

/// Parses "1000x10" or "500x10,500x8:alt" into path groups.
std::vector<PathSpecGroup> parse_path_spec(const std::string& spec);
std::vector<Pattern> build_paths(const std::vector<PathSpecGroup>& groups);

struct ConcentrationStats {
  int k = 0, trials = 0;
  long long total_vertices = 0;       ///< sum |P_i| (conserved in every trial)
  double eps = 0;
  std::vector<double> max_deviation;  ///< per trial, max_i |a(i) - total/k|
  int within = 0;                     ///< trials with max deviation <= eps * total
  double within_fraction = 0;
  bool conservation_ok = false;
  std::vector<double> mean_load;      ///< average a(i) across trials
};

/// Repeats wind_paths over independently derived seeds; path orders above
/// `max_order` (the |P_i| <= n^(1/3) cap at the chosen scale) are rejected.
ConcentrationStats concentration_experiment(const ReducedCycle& f,
                                            const std::vector<Pattern>& paths, int trials,
                                            double eps, std::uint64_t seed, int max_order = 0);

}  // namespace orient

#endif
