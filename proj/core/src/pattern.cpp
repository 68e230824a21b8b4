#include "orient/pattern.hpp"

#include <algorithm>
#include <set>

namespace orient {

Pattern::Pattern(std::vector<std::int8_t> signs) : signs_(std::move(signs)) {
  for (auto s : signs_)
    if (s != 1 && s != -1) throw InputError("pattern signs must be +1 or -1");
}

Pattern Pattern::parse(const std::string& text) {
  std::vector<std::int8_t> signs;
  signs.reserve(text.size());
  for (char c : text) {
    if (c == '+')
      signs.push_back(+1);
    else if (c == '-')
      signs.push_back(-1);
    else
      throw InputError(std::string("pattern character '") + c + "' is not '+' or '-'");
  }
  return Pattern(std::move(signs));
}

Pattern Pattern::alternating(int t) {
  std::vector<std::int8_t> signs(t);
  for (int i = 0; i < t; ++i) signs[i] = (i % 2 == 0) ? +1 : -1;
  return Pattern(std::move(signs));
}

Pattern Pattern::random(int t, Rng& rng) {
  std::vector<std::int8_t> signs(t);
  for (int i = 0; i < t; ++i) signs[i] = rng.coin() ? +1 : -1;
  return Pattern(std::move(signs));
}

Role Pattern::role(int i) const {
  int before = sign(i - 1);
  int after = sign(i);
  if (before == +1 && after == -1) return Role::Sink;
  if (before == -1 && after == +1) return Role::Source;
  return Role::Normal;
}

bool Pattern::is_directed_cycle() const {
  for (auto s : signs_)
    if (s != signs_[0]) return false;
  return true;
}

bool Pattern::is_antidirected_cycle() const {
  int t = length();
  for (int i = 0; i < t; ++i)
    if (sign(i) == sign(i + 1)) return false;
  return true;
}

bool Pattern::segment_directed(int from, int count) const {
  for (int i = 1; i < count; ++i)
    if (sign(from + i) != sign(from)) return false;
  return true;
}

bool Pattern::segment_alternating(int from, int count) const {
  for (int i = 1; i < count; ++i)
    if (sign(from + i) == sign(from + i - 1)) return false;
  return true;
}

Pattern Pattern::rotate(int r) const {
  int t = length();
  std::vector<std::int8_t> signs(t);
  for (int i = 0; i < t; ++i) signs[i] = signs_[mod(i + r)];
  return Pattern(std::move(signs));
}

Pattern Pattern::traversal_reverse() const {
  std::vector<std::int8_t> signs(signs_.rbegin(), signs_.rend());
  for (auto& s : signs) s = -s;
  return Pattern(std::move(signs));
}

std::string Pattern::to_string() const {
  std::string text;
  text.reserve(signs_.size());
  for (auto s : signs_) text.push_back(s == 1 ? '+' : '-');
  return text;
}

int sigma(const Pattern& p) {
  int count = 0;
  for (int i = 0; i < p.length(); ++i)
    if (p.role(i) == Role::Sink) ++count;
  return count;
}

int cycle_type(const Pattern& p) {
  int type = 0;
  for (auto s : p.signs()) type += s;
  return type;
}

namespace {

// + sorts before - so the directed cycle canonicalizes to all-+.
bool lex_less(const std::vector<std::int8_t>& a, const std::vector<std::int8_t>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i];  // +1 > -1, so +1 first
  }
  return false;
}

}  // namespace

Pattern canonicalize(const Pattern& p) {
  int t = p.length();
  Pattern best = p;
  const Pattern reversed = p.traversal_reverse();
  for (int r = 0; r < t; ++r) {
    for (const Pattern* base : {&p, &reversed}) {
      Pattern candidate = base->rotate(r);
      if (lex_less(candidate.signs(), best.signs())) best = candidate;
    }
  }
  return best;
}

std::vector<Pattern> canonical_patterns(int t) {
  if (t < 3) throw InputError("cycle patterns need t >= 3");
  std::set<std::vector<std::int8_t>> seen;
  for (std::uint64_t mask = 0; mask < (1ULL << t); ++mask) {
    std::vector<std::int8_t> signs(t);
    for (int i = 0; i < t; ++i) signs[i] = (mask >> i) & 1 ? -1 : +1;
    seen.insert(canonicalize(Pattern(std::move(signs))).signs());
  }
  std::vector<Pattern> result;
  result.reserve(seen.size());
  for (const auto& signs : seen) result.push_back(Pattern(signs));
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace orient
