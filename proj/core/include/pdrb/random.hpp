#pragma once

#include <cstdint>
#include <random>

namespace pdrb {

/// Seeded random source shared by every stochastic routine.
///
/// The engine is MT19937-64 (std::mt19937_64, bit-exact across standard
/// libraries). The distributions are implemented here instead of using the
/// <random> distributions, whose output is implementation-defined:
///   uniform01()        = (next() >> 11) * 2^-53, a double in [0, 1)
///   uniform_index(n)   = rejection sampling on next() against the largest
///                        multiple of n below 2^64, then value % n
///   uniform(lo, hi)    = lo + (hi - lo) * uniform01()
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  std::uint64_t uniform_index(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pdrb
