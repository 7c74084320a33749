#pragma once

#include <cstdint>

namespace aic {

/// Counter-based 64-bit random stream (SplitMix64: the state advances by a
/// fixed odd increment, the output is a bijective finalizer of the state).
///
/// Every stochastic routine in this library takes an explicit stream, and
/// derives one independent substream per unit of work (trial, sample, root)
/// from (stream, index). Results are therefore reproducible from a single
/// master seed and do not depend on thread count.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(mix(seed)) {}

  /// Independent stream for work item `index` of this stream.
  RandomStream substream(std::uint64_t index) const {
    return RandomStream(mix(state_ ^ (0x9e3779b97f4a7c15ULL + mix(index))));
  }

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1).
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, bound). Unbiased: draws are rejected below the
  /// threshold that makes every residue class equally likely.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t x = next_u64();
      if (x >= threshold) return x % bound;
    }
  }

  /// True with probability p. Exact at the endpoints: p=0 never, p=1 always.
  bool bernoulli(double p) { return next_unit() < p; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

}  // namespace aic
