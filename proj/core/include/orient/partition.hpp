#ifndef ORIENT_PARTITION_HPP
#define ORIENT_PARTITION_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "orient/errors.hpp"

namespace orient {

/// The four vertex classes in cyclic order W -> X -> Y -> Z -> W; Z is the
/// predecessor of W and X its successor.
enum class SetId : std::uint8_t { W = 0, X = 1, Y = 2, Z = 3 };

inline SetId successor(SetId j) { return static_cast<SetId>((static_cast<int>(j) + 1) % 4); }
inline SetId predecessor(SetId j) { return static_cast<SetId>((static_cast<int>(j) + 3) % 4); }
inline char set_name(SetId j) { return "WXYZ"[static_cast<int>(j)]; }

/// Disjoint (W,X,Y,Z) labeling covering all of 0..n-1.
class QuadPartition {
 public:
  QuadPartition() = default;
  /// Throws InputError unless the four sets are disjoint and cover 0..n-1.
  QuadPartition(int n, std::vector<int> w, std::vector<int> x, std::vector<int> y,
                std::vector<int> z);

  int n() const { return static_cast<int>(label_.size()); }
  SetId label(int v) const { return label_[v]; }
  bool in(int v, SetId j) const { return label_[v] == j; }
  const std::vector<int>& set(SetId j) const { return sets_[static_cast<int>(j)]; }
  int size(SetId j) const { return static_cast<int>(set(j).size()); }

  /// Vertices of J1 and J2 merged, sorted.
  std::vector<int> set_union(SetId j1, SetId j2) const;

 private:
  std::array<std::vector<int>, 4> sets_;
  std::vector<SetId> label_;
};

}  // namespace orient

#endif
