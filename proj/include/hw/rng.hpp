#pragma once

#include <cstdint>

namespace hw {

/// splitmix64: tiny, fast, and identical on every platform. Used everywhere
/// a reproducible stream is needed.
struct SplitMix64 {
  std::uint64_t state = 0;

  std::uint64_t next() noexcept {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * next_double(); }

  /// Uniform in {0, ..., m-1} (m small; modulo bias negligible here).
  std::uint64_t below(std::uint64_t m) noexcept { return next() % m; }
};

/// Deterministic substream derivation: stream `index` of `seed` starts at
/// seed + (index + 1) * golden ratio increment. This is the partitioning
/// policy the parallel oracle relies on: sample i uses substream i, so any
/// split of the sample range across workers reproduces the single-threaded
/// result bit for bit.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t index) noexcept {
  return SplitMix64{seed + (index + 1) * 0x9E3779B97F4A7C15ULL};
}

}  // namespace hw
