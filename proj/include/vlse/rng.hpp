#pragma once

#include <cstdint>

namespace vlse {

// SplitMix64 finalizer (Steele/Lea/Flood); the published mixer used for all
// seed derivation and as the counter-based uniform stream.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Splittable-stream discipline: children are independent of execution order.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t k) {
  return splitmix64(base ^ splitmix64(k + 0x9E3779B97F4A7C15ULL));
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  return derive_seed(derive_seed(base, a), b);
}

// Wichura's AS241 PPND16: inverse of the standard normal CDF, ~1e-15 accurate.
double inverse_normal_cdf(double p);

// Standard normal CDF via erfc; accurate in both tails.
double normal_cdf(double x);

// Counter-based stream: word(i) is a pure function of (seed, i), so draws can
// be generated in any order, on any thread, with identical results.
struct CounterRng {
  std::uint64_t seed = 0;

  std::uint64_t word(std::uint64_t i) const {
    return splitmix64(seed + (i + 1) * 0x9E3779B97F4A7C15ULL);
  }

  // strictly inside (0,1) so the inverse CDF is always finite
  double uniform01(std::uint64_t i) const {
    return (static_cast<double>(word(i) >> 11) + 0.5) * 0x1.0p-53;
  }

  double normal(std::uint64_t i) const { return inverse_normal_cdf(uniform01(i)); }
};

}  // namespace vlse
