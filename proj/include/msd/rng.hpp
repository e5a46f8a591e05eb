#pragma once

#include <cstdint>
#include <utility>

#include "msd/types.hpp"

namespace msd {

/// Counter-based generator: three chained splitmix64 finalizers over
/// (seed, stream, counter).  Draw j of stream i depends only on (seed, i, j),
/// so sweeps are bit-identical for any worker count or evaluation order.
struct CounterRng {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  static std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::uint64_t bits(std::uint64_t counter) const { return mix(mix(mix(seed) ^ stream) ^ counter); }

  /// Uniform in [0, 1) with 53 random bits.
  real uniform01(std::uint64_t counter) const {
    return static_cast<real>(bits(counter) >> 11) * 0x1.0p-53;
  }

  real uniform(std::uint64_t counter, real lo, real hi) const {
    return lo + (hi - lo) * uniform01(counter);
  }

  /// Standard normal via Box-Muller on counters (2c, 2c+1).
  real gaussian(std::uint64_t counter) const;
};

}  // namespace msd
