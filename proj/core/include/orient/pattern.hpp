#ifndef ORIENT_PATTERN_HPP
#define ORIENT_PATTERN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "orient/errors.hpp"
#include "orient/rng.hpp"

namespace orient {

enum class Role : std::uint8_t { Sink, Source, Normal };

/// Cyclic sign sequence s_1..s_t describing an oriented cycle: sign(i) = +1
/// means the edge between positions i and i+1 (mod t) points forward. The
/// same type doubles as the sign sequence of an open path (one sign per
/// edge); the cyclic operations below only make sense for cycles.
class Pattern {
 public:
  Pattern() = default;
  explicit Pattern(std::vector<std::int8_t> signs);

  /// Parses a string over "+-", e.g. "++-+-".
  static Pattern parse(const std::string& text);

  static Pattern directed(int t) { return Pattern(std::vector<std::int8_t>(t, +1)); }
  /// Alternating +-+-...; for odd t this is not a valid cycle orientation
  /// (cyclically, positions t and 1 repeat a sign) but is still useful as a
  /// path pattern and as the infeasible-cell key in sweep reports.
  static Pattern alternating(int t);
  static Pattern random(int t, Rng& rng);

  int length() const { return static_cast<int>(signs_.size()); }
  int sign(int i) const { return signs_[mod(i)]; }  ///< cyclic access
  const std::vector<std::int8_t>& signs() const { return signs_; }

  /// Role of position i on the cycle: sink iff s_{i-1}=+ and s_i=-, source
  /// iff s_{i-1}=- and s_i=+.
  Role role(int i) const;

  bool is_directed_cycle() const;       ///< all signs equal
  bool is_antidirected_cycle() const;   ///< no two cyclically consecutive equal signs

  /// True if the edge signs in positions [from, from+count) are all equal
  /// (count edges, read cyclically).
  bool segment_directed(int from, int count) const;
  /// True if signs in [from, from+count) strictly alternate.
  bool segment_alternating(int from, int count) const;

  Pattern rotate(int r) const;             ///< starts the sequence at position r
  Pattern traversal_reverse() const;       ///< reverse order and flip every sign
  std::string to_string() const;

  bool operator==(const Pattern& other) const { return signs_ == other.signs_; }
  bool operator<(const Pattern& other) const { return signs_ < other.signs_; }

 private:
  int mod(int i) const {
    int t = length();
    return ((i % t) + t) % t;
  }
  std::vector<std::int8_t> signs_;
};

/// Number of sink positions (equals the number of source positions).
int sigma(const Pattern& p);

/// Number of forward edges minus number of backward edges.
int cycle_type(const Pattern& p);

/// Lexicographic minimum (with + ordered before -) over all rotations of p
/// and all rotations of its traversal reversal. Two patterns canonicalize
/// equal iff they describe the same abstract oriented cycle.
Pattern canonicalize(const Pattern& p);

/// All canonical cycle patterns of length t, sorted. t >= 3.
std::vector<Pattern> canonical_patterns(int t);

}  // namespace orient

#endif
