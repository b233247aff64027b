#pragma once

#include <cstdint>

#include "mazetree/core.hpp"

namespace mazetree {

/// SplitMix64 (Steele, Lea & Flood, "Fast splittable pseudorandom number
/// generators", OOPSLA 2014). State advances by the golden-ratio increment;
/// the output is the finalizer of Vigna's reference implementation. Chosen
/// because it is tiny, fully documented, seedable, and splittable, so traces
/// are bit-reproducible across implementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Derives an independent child stream.
  SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ull); }

  /// Uniform in [0, bound), unbiased via rejection. bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return draw % bound;
  }

  /// Uniform integer in the inclusive range [lo, hi].
  Coord uniform(Coord lo, Coord hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<Coord>(next_below(span));
  }

  /// Bernoulli draw with exact probability num/den (0 <= num <= den).
  bool bernoulli(std::uint64_t num, std::uint64_t den) {
    if (num == 0) return false;
    if (num >= den) return true;
    return next_below(den) < num;
  }

 private:
  std::uint64_t state_;
};

}  // namespace mazetree
