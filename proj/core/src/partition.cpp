#include "orient/partition.hpp"

#include <algorithm>

namespace orient {

QuadPartition::QuadPartition(int n, std::vector<int> w, std::vector<int> x, std::vector<int> y,
                             std::vector<int> z) {
  sets_ = {std::move(w), std::move(x), std::move(y), std::move(z)};
  label_.assign(n, SetId::W);
  std::vector<bool> seen(n, false);
  for (int j = 0; j < 4; ++j) {
    std::sort(sets_[j].begin(), sets_[j].end());
    for (int v : sets_[j]) {
      if (v < 0 || v >= n)
        throw InputError("partition: vertex " + std::to_string(v) + " out of range");
      if (seen[v])
        throw InputError("partition: vertex " + std::to_string(v) + " appears in two sets");
      seen[v] = true;
      label_[v] = static_cast<SetId>(j);
    }
  }
  for (int v = 0; v < n; ++v)
    if (!seen[v]) throw InputError("partition: vertex " + std::to_string(v) + " unassigned");
}

std::vector<int> QuadPartition::set_union(SetId j1, SetId j2) const {
  std::vector<int> result = set(j1);
  result.insert(result.end(), set(j2).begin(), set(j2).end());
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace orient
