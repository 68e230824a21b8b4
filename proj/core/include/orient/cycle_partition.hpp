#ifndef ORIENT_CYCLE_PARTITION_HPP
#define ORIENT_CYCLE_PARTITION_HPP

#include <string>
#include <vector>

#include "orient/pattern.hpp"

namespace orient {

/// Cyclic range of `len` positions starting at `start` on a pattern.
struct Segment {
  int start = 0;
  int len = 0;
};

inline int segment_end(const Segment& s, int t) { return (s.start + s.len) % t; }

/// True if the segment's internal edges all carry the same sign.
bool seg_directed(const Pattern& p, const Segment& s);
/// True if the segment's internal edges strictly alternate.
bool seg_antidirected(const Pattern& p, const Segment& s);
/// True if every position from one before the segment to one after it is a
/// sink or source of the cycle.
bool seg_extended_nonnormal(const Pattern& p, const Segment& s);

// ---------------------------------------------------------------------------
// Few sinks: alternating split (L_1 R_1 ... L_l R_l) where the L_i jointly
// cover all sinks and sources, every R_i is a directed all-normal segment of
// order 3 mod 4, and exactly `block13` of the L_i are directed 13-segments.
// ---------------------------------------------------------------------------

struct FewSinkParams {
  int gap = 10;     ///< split between consecutive sinks at distance >= gap
  int block13 = 1;  ///< number of directed 13-segments to extract
};

struct FewSinkPartition {
  std::vector<Segment> l, r;          ///< same size, alternating L_i R_i
  std::vector<bool> l_is_directed13;  ///< marks the extracted 13-segments
  int directed13_count = 0;
};

/// Throws ConstructionError carrying the first violated condition when the
/// pattern has too many sinks or is too short for the requested extraction.
FewSinkPartition partition_few_sinks(const Pattern& p, const FewSinkParams& params);

/// Re-checks every declared invariant of a few-sink partition from scratch;
/// returns an empty string on success, else a description of the violation.
std::string validate_few_sink(const Pattern& p, const FewSinkPartition& fsp,
                              const FewSinkParams& params);

// ---------------------------------------------------------------------------
// Tuple classification for the many-sink partition.
// ---------------------------------------------------------------------------

enum class TupleType { I, II, III };

std::string to_string(TupleType t);

/// Length thresholds instantiating the asymptotic tuple-type definition at a
/// chosen scale. The documented defaults stand in for the paper's formulas:
/// min_len_I ~ 1/eps, max_len_I ~ n^(1/3), len_II = 2/eps, min_len_III ~
/// n^(1/6), max_len_III = 2 n^(1/6) (+2 so the long-segment split residue,
/// which can exceed the stated bound by at most 2, still classifies).
struct TupleTypeParams {
  int min_len_I = 10;
  int max_len_I = 38;
  int len_II = 20;
  int min_len_III = 16;
  int max_len_III = 34;
};

/// Classifies (q_prev, p_seg, q) against the three tuple types. Throws
/// ConstructionError naming the segment when none matches.
TupleType classify_tuple(const Pattern& p, const Segment& q_prev, const Segment& p_seg,
                         const Segment& q, const TupleTypeParams& params);

// ---------------------------------------------------------------------------
// Many sinks: path partition (L_Y Q_0 P_1 Q_1 ... P_t Q_t P) plus the greedy
// assignment of P_1..P_t into families with saturation intervals.
// ---------------------------------------------------------------------------

struct ManySinkParams {
  int k = 4;
  int k_star = 3;
  int m = 40;
  int delta_n = 38;   ///< the delta*n slack in the saturation intervals
  double xi = 0.04;   ///< requires sigma(p) >= xi * t
  int ly_len = 0;     ///< 0 derives ceil(sqrt(xi) * t)
  TupleTypeParams tuple;
};

struct ManySinkPartition {
  Segment l_y, q0;
  std::vector<Segment> p, q;  ///< P_i, Q_i pairs, i = 1..t (index 0 = P_1)
  Segment tail;               ///< the trailing path P, always nonempty
  std::vector<TupleType> types;
  std::vector<std::vector<int>> families;  ///< [0..k]; values index into p
  std::vector<int> i1, i3;                 ///< partition of slots 1..k
  int leftover_excess = 0;  ///< split residues above 2*min_len_III (reported, not hidden)
};

/// Parameter violations (sigma below xi*t, bad k_star, empty intervals,
/// interval slack narrower than the largest piece) throw InputError; a greedy
/// that exhausts the pattern before saturating k families throws
/// ConstructionError.
ManySinkPartition partition_many_sinks(const Pattern& p, const ManySinkParams& params);

/// Independent re-check of every declared invariant; empty string on success.
std::string validate_many_sink(const Pattern& p, const ManySinkPartition& msp,
                               const ManySinkParams& params);

/// Serializes a partition as a JSON array of {kind, start, len, type} rows.
std::string few_sink_to_json(const FewSinkPartition& fsp);
std::string many_sink_to_json(const ManySinkPartition& msp);

}  // namespace orient

#endif
