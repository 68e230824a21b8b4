#include "orient/winding.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orient/errors.hpp"

namespace orient {

WindingResult wind_paths(const ReducedCycle& f, const std::vector<Pattern>& paths,
                         std::uint64_t seed) {
  if (f.k < 3) throw InputError("wind_paths: the cluster cycle needs k >= 3");
  if (paths.empty()) throw InputError("wind_paths: no paths given");
  Rng rng(seed);
  WindingResult result;
  result.load.assign(f.k, 0);
  result.assignment.reserve(paths.size());
  for (const Pattern& p : paths) {
    // only the start cluster is random; the walk is dictated by the signs
    int cluster = rng.below_int(f.k);
    std::vector<int> clusters;
    clusters.reserve(p.length() + 1);
    clusters.push_back(cluster);
    ++result.load[cluster];
    for (int i = 0; i < p.length(); ++i) {
      cluster = (cluster + (p.signs()[i] == 1 ? 1 : f.k - 1)) % f.k;
      clusters.push_back(cluster);
      ++result.load[cluster];
    }
    result.assignment.push_back(std::move(clusters));
  }
  return result;
}

std::vector<PathSpecGroup> parse_path_spec(const std::string& spec) {
  std::vector<PathSpecGroup> groups;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    PathSpecGroup g;
    std::size_t x = item.find('x');
    std::size_t colon = item.find(':');
    if (x == std::string::npos) throw InputError("path spec group '" + item + "' is not COUNTxORDER");
    try {
      g.count = std::stoi(item.substr(0, x));
      g.order = std::stoi(item.substr(x + 1, colon == std::string::npos ? std::string::npos
                                                                        : colon - x - 1));
    } catch (const std::exception&) {
      throw InputError("path spec group '" + item + "' is not COUNTxORDER");
    }
    if (colon != std::string::npos) {
      std::string tag = item.substr(colon + 1);
      if (tag == "alt")
        g.alternating = true;
      else
        throw InputError("unknown path spec tag '" + tag + "'");
    }
    if (g.count <= 0 || g.order <= 0)
      throw InputError("path spec group '" + item + "' must have positive count and order");
    groups.push_back(g);
  }
  if (groups.empty()) throw InputError("empty path spec");
  return groups;
}

std::vector<Pattern> build_paths(const std::vector<PathSpecGroup>& groups) {
  std::vector<Pattern> paths;
  for (const auto& g : groups) {
    Pattern shape = g.alternating ? Pattern::alternating(g.order - 1)
                                  : Pattern::directed(g.order - 1);
    for (int i = 0; i < g.count; ++i) paths.push_back(shape);
  }
  return paths;
}

ConcentrationStats concentration_experiment(const ReducedCycle& f,
                                            const std::vector<Pattern>& paths, int trials,
                                            double eps, std::uint64_t seed, int max_order) {
  if (trials < 1) throw InputError("concentration_experiment: trials must be >= 1");
  ConcentrationStats stats;
  stats.k = f.k;
  stats.trials = trials;
  stats.eps = eps;
  for (const Pattern& p : paths) {
    int order = p.length() + 1;
    if (max_order > 0 && order > max_order)
      throw InputError("concentration_experiment: path of order " + std::to_string(order) +
                       " exceeds the cap " + std::to_string(max_order));
    stats.total_vertices += order;
  }

  Rng rng(seed);
  stats.mean_load.assign(f.k, 0.0);
  stats.conservation_ok = true;
  const double expected = static_cast<double>(stats.total_vertices) / f.k;
  for (int trial = 0; trial < trials; ++trial) {
    WindingResult w = wind_paths(f, paths, rng.next());
    long long sum = 0;
    double max_dev = 0;
    for (int i = 0; i < f.k; ++i) {
      sum += w.load[i];
      max_dev = std::max(max_dev, std::abs(w.load[i] - expected));
      stats.mean_load[i] += static_cast<double>(w.load[i]) / trials;
    }
    stats.conservation_ok = stats.conservation_ok && sum == stats.total_vertices;
    stats.max_deviation.push_back(max_dev);
    if (max_dev <= eps * static_cast<double>(stats.total_vertices)) ++stats.within;
  }
  stats.within_fraction = static_cast<double>(stats.within) / trials;
  return stats;
}

}  // namespace orient
