#include "orient/cycle_partition.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "orient/errors.hpp"

namespace orient {

bool seg_directed(const Pattern& p, const Segment& s) {
  return s.len < 2 || p.segment_directed(s.start, s.len - 1);
}

bool seg_antidirected(const Pattern& p, const Segment& s) {
  return s.len < 2 || p.segment_alternating(s.start, s.len - 1);
}

bool seg_extended_nonnormal(const Pattern& p, const Segment& s) {
  for (int i = -1; i <= s.len; ++i)
    if (p.role(s.start + i) == Role::Normal) return false;
  return true;
}

std::string to_string(TupleType t) {
  switch (t) {
    case TupleType::I: return "I";
    case TupleType::II: return "II";
    default: return "III";
  }
}

namespace {

int cyclic_dist(int from, int to, int t) { return ((to - from) % t + t) % t; }

std::vector<int> nonnormal_positions(const Pattern& p) {
  std::vector<int> ns;
  for (int i = 0; i < p.length(); ++i)
    if (p.role(i) != Role::Normal) ns.push_back(i);
  return ns;
}

}  // namespace

// ---------------------------------------------------------------------------
// Few sinks
// ---------------------------------------------------------------------------

FewSinkPartition partition_few_sinks(const Pattern& p, const FewSinkParams& params) {
  const int t = p.length();
  if (t < 3) throw InputError("partition_few_sinks: cycle pattern needs t >= 3");
  if (params.gap < 6) throw InputError("partition_few_sinks: gap must be >= 6");
  if (params.block13 < 0) throw InputError("partition_few_sinks: block13 must be >= 0");
  if (params.block13 > 0 && t < 13)
    throw ConstructionError("partition_few_sinks: pattern of length " + std::to_string(t) +
                            " cannot contain a 13-segment");

  const std::vector<int> ns = nonnormal_positions(p);
  FewSinkPartition out;

  // Primary split between consecutive sinks/sources at distance >= gap.
  // Each P-piece runs from the position after one break to 2..5 past the
  // next break, leaving directed all-normal gaps of order 3 mod 4.
  std::vector<Segment> primary;                 // the P_i (cover all non-normal positions)
  std::vector<std::pair<int, int>> gaps;        // directed stretches [start, len] between P's
  if (ns.empty()) {
    if (params.block13 == 0)
      throw ConstructionError("partition_few_sinks: sigma = 0 and block13 = 0 leaves nothing to split");
    // 13-blocks plus gaps of order 3 mod 4 must tile the whole cycle
    if (t % 4 != 0)
      throw ConstructionError("partition_few_sinks: sigma = 0 needs t divisible by 4, got t = " +
                              std::to_string(t));
    gaps.emplace_back(0, t);
  } else {
    const int m = static_cast<int>(ns.size());
    std::vector<int> breaks;  // indices j with dist(ns[j], ns[j+1]) >= gap
    for (int j = 0; j < m; ++j)
      if (cyclic_dist(ns[j], ns[(j + 1) % m], t) >= params.gap) breaks.push_back(j);
    if (breaks.empty())
      throw ConstructionError(
          "partition_few_sinks: no pair of consecutive sinks/sources at distance >= " +
          std::to_string(params.gap));
    const int b = static_cast<int>(breaks.size());
    for (int i = 0; i < b; ++i) {
      int prev_break = breaks[(i - 1 + b) % b];
      int start = ns[(prev_break + 1) % m];  // first sink after the previous break
      int anchor = ns[breaks[i]];            // break sink: far from its successor
      int next = ns[(breaks[i] + 1) % m];
      int dist = cyclic_dist(anchor, next, t);
      int d = 2;
      while ((dist - d) % 4 != 0) ++d;  // d in {2,3,4,5}
      int cut = (anchor + d) % t;       // last vertex of the P-piece
      Segment piece{start, cyclic_dist(start, cut, t) + 1};
      primary.push_back(piece);
      gaps.emplace_back((cut + 1) % t, dist - d - 1);
    }
  }

  // Count the 13-slots available inside the directed gaps; each gap of order
  // q (== 3 mod 4) holds floor((q-3)/16) of them.
  int available = 0;
  for (auto& [start, len] : gaps) {
    (void)start;
    available += (len - 3) / 16;
  }
  if (available < params.block13)
    throw ConstructionError("partition_few_sinks: only " + std::to_string(available) +
                            " directed 13-segments available, need " +
                            std::to_string(params.block13));

  // Assemble L_1 R_1 ... L_l R_l: the P-pieces plus block13 chosen
  // 13-segments become the L_i; everything between consecutive L_i is an R_i.
  struct Piece {
    Segment seg;
    bool is_l;
    bool is13;
  };
  std::vector<Piece> pieces;
  int remaining13 = params.block13;
  for (std::size_t gi = 0; gi < gaps.size(); ++gi) {
    if (!primary.empty()) pieces.push_back({primary[gi], true, false});
    auto [gstart, glen] = gaps[gi];
    int take = std::min(remaining13, (glen - 3) / 16);
    remaining13 -= take;
    int cursor = gstart;
    int rest = glen;
    for (int j = 0; j < take; ++j) {
      pieces.push_back({Segment{cursor, 3}, false, false});  // leading R chunk
      cursor = (cursor + 3) % t;
      pieces.push_back({Segment{cursor, 13}, true, true});
      cursor = (cursor + 13) % t;
      rest -= 16;
    }
    if (rest > 0) pieces.push_back({Segment{cursor, rest}, false, false});
  }

  // Merge consecutive non-L chunks into single R segments. The piece list is
  // cyclic; rotate it so it starts with an L.
  std::size_t first_l = 0;
  while (!pieces[first_l].is_l) ++first_l;
  std::rotate(pieces.begin(), pieces.begin() + first_l, pieces.end());
  for (std::size_t i = 0; i < pieces.size();) {
    if (!pieces[i].is_l) {
      ++i;
      continue;
    }
    out.l.push_back(pieces[i].seg);
    out.l_is_directed13.push_back(pieces[i].is13);
    std::size_t j = i + 1;
    Segment r{segment_end(pieces[i].seg, t), 0};
    while (j < pieces.size() && !pieces[j].is_l) {
      r.len += pieces[j].seg.len;
      ++j;
    }
    out.r.push_back(r);
    i = j;
  }
  // close the cycle: trailing non-L pieces (if any) wrapped into the last R
  out.directed13_count = params.block13;
  return out;
}

std::string validate_few_sink(const Pattern& p, const FewSinkPartition& fsp,
                              const FewSinkParams& params) {
  const int t = p.length();
  const std::size_t l = fsp.l.size();
  if (l == 0) return "no segments";
  if (fsp.r.size() != l) return "L/R count mismatch";

  std::vector<int> cover(t, 0);
  int cursor = fsp.l[0].start;
  for (std::size_t i = 0; i < l; ++i) {
    if (fsp.l[i].start != cursor) return "L_" + std::to_string(i + 1) + " not contiguous";
    for (int j = 0; j < fsp.l[i].len; ++j) cover[(fsp.l[i].start + j) % t]++;
    cursor = segment_end(fsp.l[i], t);
    if (fsp.r[i].start != cursor) return "R_" + std::to_string(i + 1) + " not contiguous";
    for (int j = 0; j < fsp.r[i].len; ++j) cover[(fsp.r[i].start + j) % t]++;
    cursor = segment_end(fsp.r[i], t);
  }
  if (cursor != fsp.l[0].start) return "segments do not close the cycle";
  for (int v = 0; v < t; ++v)
    if (cover[v] != 1) return "position " + std::to_string(v) + " covered " + std::to_string(cover[v]) + " times";

  int count13 = 0;
  for (std::size_t i = 0; i < l; ++i) {
    if (fsp.l[i].len < 3) return "L_" + std::to_string(i + 1) + " shorter than 3";
    if (fsp.r[i].len < 3) return "R_" + std::to_string(i + 1) + " shorter than 3";
    if (fsp.r[i].len % 4 != 3) return "R_" + std::to_string(i + 1) + " order not 3 mod 4";
    if (!seg_directed(p, fsp.r[i])) return "R_" + std::to_string(i + 1) + " not directed";
    for (int j = 0; j < fsp.r[i].len; ++j)
      if (p.role(fsp.r[i].start + j) != Role::Normal)
        return "R_" + std::to_string(i + 1) + " contains a non-normal position";
    // dist(L_i, L_{i+1}) = |R_i| + 1 must be 0 mod 4
    if ((fsp.r[i].len + 1) % 4 != 0) return "dist(L_i, L_{i+1}) not 0 mod 4";
    bool is13 = fsp.l[i].len == 13 && seg_directed(p, fsp.l[i]);
    if (is13 != fsp.l_is_directed13[i])
      return "L_" + std::to_string(i + 1) + " directed-13 flag wrong";
    if (is13) ++count13;
  }
  if (count13 != params.block13)
    return "expected " + std::to_string(params.block13) + " directed 13-segments, found " +
           std::to_string(count13);

  // all sinks and sources covered by the L's
  for (int v = 0; v < t; ++v) {
    if (p.role(v) == Role::Normal) continue;
    bool in_l = false;
    for (std::size_t i = 0; i < l && !in_l; ++i) {
      int off = cyclic_dist(fsp.l[i].start, v, t);
      in_l = off < fsp.l[i].len;
    }
    if (!in_l) return "sink/source at " + std::to_string(v) + " outside every L";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Tuple classification
// ---------------------------------------------------------------------------

TupleType classify_tuple(const Pattern& p, const Segment& q_prev, const Segment& p_seg,
                         const Segment& q, const TupleTypeParams& params) {
  const bool prev_directed = seg_directed(p, q_prev);
  if (prev_directed && seg_directed(p, q) && p_seg.len >= params.min_len_I &&
      p_seg.len <= params.max_len_I)
    return TupleType::I;
  if (prev_directed && seg_extended_nonnormal(p, q) && p_seg.len == params.len_II)
    return TupleType::II;
  if (seg_extended_nonnormal(p, q_prev) && seg_antidirected(p, p_seg) &&
      p_seg.len >= params.min_len_III && p_seg.len <= params.max_len_III)
    return TupleType::III;
  throw ConstructionError("tuple at position " + std::to_string(p_seg.start) + " (|P|=" +
                          std::to_string(p_seg.len) + ") matches none of type I/II/III");
}

// ---------------------------------------------------------------------------
// Many sinks
// ---------------------------------------------------------------------------

namespace {

struct Family {
  std::vector<int> members;  // indices into the P-piece list
  int vertices = 0;
  enum class Class { TypeI, ThirdA, ThirdB } cls = Class::TypeI;
  bool saturated = false;
};

}  // namespace

ManySinkPartition partition_many_sinks(const Pattern& p, const ManySinkParams& params) {
  const int t = p.length();
  const TupleTypeParams& tp = params.tuple;
  const int sinks = sigma(p);
  if (sinks < params.xi * t)
    throw InputError("partition_many_sinks: sigma(p) = " + std::to_string(sinks) +
                     " below xi*t = " + std::to_string(params.xi * t));
  if (params.k < 2 || params.k_star * 2 < params.k || params.k_star > params.k)
    throw InputError("partition_many_sinks: need k/2 <= k_star <= k");
  if (2 * params.m - 2 * params.delta_n < 1)
    throw InputError("partition_many_sinks: saturation interval [2m-2dn, 2m-dn] empty or non-positive");
  const int max_piece = std::max({tp.max_len_I, tp.max_len_III, tp.len_II});
  if (params.delta_n < max_piece)
    throw InputError("partition_many_sinks: delta_n must be >= largest piece length " +
                     std::to_string(max_piece) + " or saturation windows can be stepped over");
  if (tp.max_len_I < tp.len_II + 3 + tp.min_len_III - 1)
    throw InputError("partition_many_sinks: max_len_I too small for the long-segment split");
  if (tp.max_len_III < 2 * tp.min_len_III + 2)
    throw InputError("partition_many_sinks: max_len_III must cover the split residue 2*min_len_III+2");
  if (tp.len_II < tp.min_len_I + 2)
    throw InputError("partition_many_sinks: len_II must be >= min_len_I + 2");

  ManySinkPartition out;
  const bool antidirected = p.is_antidirected_cycle();
  const int ly_len = params.ly_len > 0
                         ? params.ly_len
                         : static_cast<int>(std::ceil(std::sqrt(params.xi) * t));
  const int quota = static_cast<int>(std::ceil(params.xi * params.xi * t));
  const int q0_len = antidirected ? 13 : 3;
  if (ly_len + q0_len + 1 >= t)
    throw InputError("partition_many_sinks: pattern too short for L_Y and Q_0");

  // L_Y: a window of the configured length carrying the sink quota, placed so
  // that the segment right after it is an admissible Q_0.
  int ly_start = -1;
  for (int start = 0; start < t; ++start) {
    int window_sinks = 0;
    for (int j = 0; j < ly_len; ++j)
      if (p.role(start + j) == Role::Sink) ++window_sinks;
    if (window_sinks < quota) continue;
    int q0s = (start + ly_len) % t;
    if (antidirected) {
      if (p.role(q0s) != Role::Source) continue;
    } else {
      if (!p.segment_directed(q0s, 2)) continue;  // directed 3-path = two equal edge signs
    }
    ly_start = start;
    break;
  }
  if (ly_start < 0)
    throw ConstructionError(
        "partition_many_sinks: no L_Y window with the sink quota and an admissible Q_0 after it");
  out.l_y = Segment{ly_start, ly_len};
  out.q0 = Segment{(ly_start + ly_len) % t, q0_len};

  // Primary partition: grow L until it reaches min_len_I and a directed
  // 3-path follows (which becomes the next Q), or the cycle wraps to L_Y.
  // Long L pieces are split as L' Q^1 P^1 Q^2 ... P^r Q^{r+1} L''; the lists
  // stay aligned so that piece_p[i] is followed by piece_q[i] on the cycle.
  std::vector<Segment> piece_p, piece_q;
  {
    int cursor = segment_end(out.q0, t);
    int remaining = t - ly_len - q0_len;
    while (remaining > 0) {
      Segment cur{cursor, 0};
      Segment run_q{0, 0};  // the directed 3-path that ended this L, if any
      while (remaining > 0) {
        if (cur.len >= tp.min_len_I && remaining >= 3 &&
            p.segment_directed((cursor + cur.len) % t, 2)) {
          run_q = Segment{(cursor + cur.len) % t, 3};
          remaining -= 3;
          break;
        }
        ++cur.len;
        --remaining;
      }
      auto pair = [&](Segment ps, Segment qs) {
        piece_p.push_back(ps);
        piece_q.push_back(qs);
      };
      if (cur.len > tp.max_len_I) {
        const int step = 3 + tp.min_len_III;
        int r = (cur.len - tp.len_II - 3 - tp.min_len_III) / step;
        int rem = cur.len - tp.len_II - 3 - r * step;
        out.leftover_excess += std::max(0, rem - 2 * tp.min_len_III);
        int at = cur.start;
        auto cut = [&](int len) {
          Segment s{at, len};
          at = (at + len) % t;
          return s;
        };
        Segment lp = cut(tp.len_II);
        pair(lp, cut(3));
        for (int j = 0; j < r; ++j) {
          Segment pj = cut(tp.min_len_III);
          pair(pj, cut(3));
        }
        pair(cut(rem), run_q);
      } else {
        pair(cur, run_q);
      }
      cursor = (run_q.len > 0) ? segment_end(run_q, t) : (cur.start + cur.len) % t;
    }
  }

  const int l = static_cast<int>(piece_p.size());

  // Greedy family assignment with the alpha/beta/gamma pointer discipline.
  const int kk = params.k;
  std::vector<Family> fams(kk + 3);  // 1-based, up to k+2
  int alpha = 1, beta = 2, gamma = 3;
  int third_claims = 1;  // beta's first family is its first claim
  fams[beta].cls = third_claims <= params.k_star ? Family::Class::ThirdA : Family::Class::ThirdB;
  std::vector<int> fam0;
  int fam0_vertices = 0;
  auto interval_low = [&](Family::Class c) {
    switch (c) {
      case Family::Class::TypeI: return 3 * params.m - 2 * params.delta_n;
      case Family::Class::ThirdA: return 2 * params.m - 2 * params.delta_n;
      default: return 4 * params.m - 2 * params.delta_n;
    }
  };
  auto interval_high = [&](Family::Class c) {
    switch (c) {
      case Family::Class::TypeI: return 3 * params.m - params.delta_n;
      case Family::Class::ThirdA: return 2 * params.m - params.delta_n;
      default: return 4 * params.m - params.delta_n;
    }
  };

  int last = -1;  // index of the final assigned piece; everything after is the tail
  std::vector<TupleType> types;
  for (int i = 0; i < l && gamma <= kk + 2; ++i) {
    if (piece_q[i].len == 0) break;  // the final piece has no connecting Q; stop here
    const Segment& prev_q = (i == 0) ? out.q0 : piece_q[i - 1];
    TupleType type = classify_tuple(p, prev_q, piece_p[i], piece_q[i], tp);
    types.push_back(type);
    if (type == TupleType::II) {
      fam0.push_back(i);
      fam0_vertices += piece_p[i].len;
      last = i;
      continue;
    }
    int target = (type == TupleType::I) ? alpha : beta;
    fams[target].members.push_back(i);
    fams[target].vertices += piece_p[i].len;
    last = i;
    if (fams[target].vertices >= interval_low(fams[target].cls) &&
        fams[target].vertices <= interval_high(fams[target].cls)) {
      fams[target].saturated = true;
      if (type == TupleType::I)
        alpha = gamma++;
      else
        beta = gamma++;
      if (gamma <= kk + 2) {
        int fresh = (type == TupleType::I) ? alpha : beta;
        if (type == TupleType::I) {
          fams[fresh].cls = Family::Class::TypeI;
        } else {
          ++third_claims;
          fams[fresh].cls =
              third_claims <= params.k_star ? Family::Class::ThirdA : Family::Class::ThirdB;
        }
      }
    }
  }
  if (gamma <= kk + 2)
    throw ConstructionError("partition_many_sinks: greedy exhausted the pattern with only " +
                            std::to_string(gamma - 3) + " of " + std::to_string(kk) +
                            " families saturated");
  if (last + 1 >= l)
    throw ConstructionError("partition_many_sinks: no pieces left for the trailing path P");

  // The unsaturated family joins P_0; saturated ones take slots 1..k with
  // first-interval (2m) families at slots <= k_star and second-interval (4m)
  // families above.
  std::vector<int> slot_of_family(kk + 3, -1);
  {
    std::vector<int> a_fams, b_fams, i_fams;
    for (int f = 1; f <= kk + 2; ++f) {
      if (!fams[f].saturated) {
        for (int idx : fams[f].members) {
          fam0.push_back(idx);
          fam0_vertices += piece_p[idx].len;
        }
        continue;
      }
      switch (fams[f].cls) {
        case Family::Class::ThirdA: a_fams.push_back(f); break;
        case Family::Class::ThirdB: b_fams.push_back(f); break;
        default: i_fams.push_back(f); break;
      }
    }
    if (static_cast<int>(a_fams.size()) > params.k_star ||
        static_cast<int>(b_fams.size()) > kk - params.k_star)
      throw ConstructionError("partition_many_sinks: saturated families do not fit the k_star split");
    int slot = 1;
    for (int f : a_fams) slot_of_family[f] = slot++;
    slot = params.k_star + 1;
    for (int f : b_fams) slot_of_family[f] = slot++;
    // type I families fill whatever slots remain
    std::vector<bool> used(kk + 1, false);
    for (int f = 1; f <= kk + 2; ++f)
      if (slot_of_family[f] > 0) used[slot_of_family[f]] = true;
    std::size_t next_i = 0;
    for (int s2 = 1; s2 <= kk && next_i < i_fams.size(); ++s2)
      if (!used[s2]) {
        slot_of_family[i_fams[next_i++]] = s2;
        used[s2] = true;
      }
    if (next_i != i_fams.size())
      throw ConstructionError("partition_many_sinks: more saturated families than slots");
  }

  out.families.assign(kk + 1, {});
  out.families[0] = std::move(fam0);
  std::sort(out.families[0].begin(), out.families[0].end());
  for (int f = 1; f <= kk + 2; ++f)
    if (slot_of_family[f] > 0) {
      out.families[slot_of_family[f]] = fams[f].members;
      if (fams[f].cls == Family::Class::TypeI)
        out.i1.push_back(slot_of_family[f]);
      else
        out.i3.push_back(slot_of_family[f]);
    }
  std::sort(out.i1.begin(), out.i1.end());
  std::sort(out.i3.begin(), out.i3.end());

  if (fam0_vertices > 4 * params.m)
    throw ConstructionError("partition_many_sinks: |V(P_0)| = " + std::to_string(fam0_vertices) +
                            " exceeds 4m = " + std::to_string(4 * params.m));

  out.p.assign(piece_p.begin(), piece_p.begin() + last + 1);
  out.q.assign(piece_q.begin(), piece_q.begin() + last + 1);
  out.types = std::move(types);
  int tail_start = segment_end(piece_q[last], t);
  out.tail = Segment{tail_start, cyclic_dist(tail_start, ly_start, t)};
  return out;
}

std::string validate_many_sink(const Pattern& p, const ManySinkPartition& msp,
                               const ManySinkParams& params) {
  const int t = p.length();
  const int steps = static_cast<int>(msp.p.size());
  if (msp.q.size() != msp.p.size() || msp.types.size() != msp.p.size())
    return "P/Q/type list size mismatch";
  if (msp.tail.len <= 0) return "trailing path P is empty";

  // exact tiling: L_Y Q_0 P_1 Q_1 ... P_t Q_t P
  std::vector<int> cover(t, 0);
  auto mark = [&](const Segment& s) {
    for (int j = 0; j < s.len; ++j) cover[(s.start + j) % t]++;
  };
  int cursor = msp.l_y.start;
  auto expect = [&](const Segment& s, const char* name) -> std::string {
    if (s.start != cursor) return std::string(name) + " not contiguous";
    mark(s);
    cursor = segment_end(s, t);
    return "";
  };
  std::string err;
  if (!(err = expect(msp.l_y, "L_Y")).empty()) return err;
  if (!(err = expect(msp.q0, "Q_0")).empty()) return err;
  for (int i = 0; i < steps; ++i) {
    if (!(err = expect(msp.p[i], "P")).empty()) return err + " at " + std::to_string(i + 1);
    if (!(err = expect(msp.q[i], "Q")).empty()) return err + " at " + std::to_string(i + 1);
  }
  if (!(err = expect(msp.tail, "tail")).empty()) return err;
  if (cursor != msp.l_y.start) return "partition does not close the cycle";
  for (int v = 0; v < t; ++v)
    if (cover[v] != 1) return "position " + std::to_string(v) + " covered " + std::to_string(cover[v]) + " times";

  // C1: |L_Y| and its sink count; |Q_i| = 3
  const int ly_len = params.ly_len > 0
                         ? params.ly_len
                         : static_cast<int>(std::ceil(std::sqrt(params.xi) * t));
  if (msp.l_y.len != ly_len) return "L_Y length mismatch";
  int ly_sinks = 0;
  for (int j = 0; j < msp.l_y.len; ++j)
    if (p.role(msp.l_y.start + j) == Role::Sink) ++ly_sinks;
  if (ly_sinks < std::ceil(params.xi * params.xi * t)) return "sigma(L_Y) below xi^2 * t";
  for (int i = 0; i < steps; ++i)
    if (msp.q[i].len != 3) return "Q_" + std::to_string(i + 1) + " is not a 3-segment";

  // C3: Q_0 shape
  const bool anti = p.is_antidirected_cycle();
  if (anti) {
    if (msp.q0.len != 13 || !seg_antidirected(p, msp.q0)) return "Q_0 must be an antidirected 13-segment";
    if (p.role(msp.q0.start) != Role::Source) return "Q_0 must start at a source";
  } else {
    if (msp.q0.len != 3 || !seg_directed(p, msp.q0)) return "Q_0 must be a directed 3-segment";
  }

  // C2: recompute every type
  for (int i = 0; i < steps; ++i) {
    const Segment& prev_q = (i == 0) ? msp.q0 : msp.q[i - 1];
    TupleType type;
    try {
      type = classify_tuple(p, prev_q, msp.p[i], msp.q[i], params.tuple);
    } catch (const ConstructionError& e) {
      return e.what();
    }
    if (type != msp.types[i]) return "type mismatch at tuple " + std::to_string(i + 1);
  }

  // C4-C7: family composition and saturation intervals
  if (static_cast<int>(msp.families.size()) != params.k + 1) return "family count mismatch";
  {
    std::vector<int> seen;
    for (const auto& fam : msp.families)
      for (int idx : fam) seen.push_back(idx);
    std::sort(seen.begin(), seen.end());
    std::vector<int> all(steps);
    for (int i = 0; i < steps; ++i) all[i] = i;
    if (seen != all) return "families do not partition the P_i";
  }
  int fam0_vertices = 0;
  for (int idx : msp.families[0]) {
    fam0_vertices += msp.p[idx].len;
  }
  for (int i = 0; i < steps; ++i)
    if (msp.types[i] == TupleType::II &&
        std::find(msp.families[0].begin(), msp.families[0].end(), i) == msp.families[0].end())
      return "type II piece outside P_0";
  if (fam0_vertices > 4 * params.m) return "|V(P_0)| exceeds 4m";

  std::vector<int> slots(msp.i1);
  slots.insert(slots.end(), msp.i3.begin(), msp.i3.end());
  std::sort(slots.begin(), slots.end());
  std::vector<int> expected(params.k);
  for (int i = 0; i < params.k; ++i) expected[i] = i + 1;
  if (slots != expected) return "I_1, I_3 do not partition [k]";

  for (int s : msp.i1) {
    int v = 0;
    for (int idx : msp.families[s]) {
      if (msp.types[idx] != TupleType::I) return "family in I_1 holds a non-type-I piece";
      v += msp.p[idx].len;
    }
    if (v < 3 * params.m - 2 * params.delta_n || v > 3 * params.m - params.delta_n)
      return "family " + std::to_string(s) + " outside the 3m saturation interval";
  }
  for (int s : msp.i3) {
    int v = 0;
    for (int idx : msp.families[s]) {
      if (msp.types[idx] != TupleType::III) return "family in I_3 holds a non-type-III piece";
      v += msp.p[idx].len;
    }
    if (s <= params.k_star) {
      if (v < 2 * params.m - 2 * params.delta_n || v > 2 * params.m - params.delta_n)
        return "family " + std::to_string(s) + " outside the 2m saturation interval";
    } else {
      if (v < 4 * params.m - 2 * params.delta_n || v > 4 * params.m - params.delta_n)
        return "family " + std::to_string(s) + " outside the 4m saturation interval";
    }
  }
  return "";
}

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

namespace {

void json_row(std::ostringstream& os, bool& first, const std::string& kind, const Segment& s,
              const std::string& type) {
  if (!first) os << ",";
  first = false;
  os << "{\"kind\":\"" << kind << "\",\"start\":" << s.start << ",\"len\":" << s.len;
  if (!type.empty()) os << ",\"type\":\"" << type << "\"";
  os << "}";
}

}  // namespace

std::string few_sink_to_json(const FewSinkPartition& fsp) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (std::size_t i = 0; i < fsp.l.size(); ++i) {
    json_row(os, first, "L", fsp.l[i], fsp.l_is_directed13[i] ? "directed13" : "");
    json_row(os, first, "R", fsp.r[i], "");
  }
  os << "]";
  return os.str();
}

std::string many_sink_to_json(const ManySinkPartition& msp) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  json_row(os, first, "L_Y", msp.l_y, "");
  json_row(os, first, "Q0", msp.q0, "");
  for (std::size_t i = 0; i < msp.p.size(); ++i) {
    json_row(os, first, "P", msp.p[i], to_string(msp.types[i]));
    json_row(os, first, "Q", msp.q[i], "");
  }
  json_row(os, first, "tail", msp.tail, "");
  os << "]";
  return os.str();
}

}  // namespace orient
