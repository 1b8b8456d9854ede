#pragma once

#include <cstdint>

#include "liestrata/rat.hpp"

namespace liestrata {

/// splitmix64: tiny, fast, and reproducible across platforms. Every
/// probabilistic routine derives a per-sample stream from (seed, index)
/// so results do not depend on thread scheduling.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [lo, hi] inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Random rational with numerator in [-range, range] and denominator
  /// in [1, range].
  Rat next_rat(std::int64_t range = 1000000) {
    const std::int64_t num = next_int(-range, range);
    const std::int64_t den = next_int(1, range);
    Rat r(static_cast<long>(num), static_cast<long>(den));
    r.canonicalize();
    return r;
  }
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x517cc1b727220a95ULL * (index + 1)));
  g.next();
  return g.next();
}

}  // namespace liestrata
