#ifndef ORIENT_RNG_HPP
#define ORIENT_RNG_HPP

#include <cstdint>

namespace orient {

// SplitMix64. Used instead of std::uniform_int_distribution so that streams
// are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    // rejection sampling keeps the draw unbiased
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  int below_int(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

  bool coin() { return (next() & 1ULL) != 0; }

  /// Independent stream for a sub-task, derived deterministically.
  Rng fork(std::uint64_t tag) { return Rng(next() ^ (tag * 0x9e3779b97f4a7c15ULL)); }

 private:
  std::uint64_t state_;
};

}  // namespace orient

#endif
