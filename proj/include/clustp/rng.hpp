#pragma once

#include <cmath>
#include <cstdint>

namespace clustp {

// splitmix64 (Steele, Lea & Flood; Vigna's fixed-increment variant).
// Chosen because the whole 64-bit state and the mixing function are pinned
// here, so seeded experiments replay bit-identically on any platform.
// std::mt19937 would also replay, but the distribution adapters in
// <random> are implementation-defined, so all bounded/real draws below are
// spelled out explicitly instead.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform on [0, n), unbiased via bitmask rejection. n must be > 0.
  std::uint64_t next_below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t mask = mask_for(n - 1);
    std::uint64_t x;
    do {
      x = next() & mask;
    } while (x >= n);
    return x;
  }

  // Uniform on [0, 1) with 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  // Standard normal via Box-Muller; consumes exactly two draws.
  double next_gaussian() {
    double u1 = next_double();
    const double u2 = next_double();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

private:
  static std::uint64_t mask_for(std::uint64_t v) {
    v |= v >> 1;
    v |= v >> 2;
    v |= v >> 4;
    v |= v >> 8;
    v |= v >> 16;
    v |= v >> 32;
    return v;
  }

  std::uint64_t state_;
};

// One splitmix64 step applied to the bare counter value.
inline std::uint64_t splitmix64_mix(std::uint64_t x) {
  return SplitMix64(x).next();
}

// Stream splitting for repeated trials: trial t of a batch seeded with
// master_seed runs on master_seed XOR splitmix64_mix(t). Index-based, so
// serial and parallel execution derive identical per-trial seeds.
inline std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return master_seed ^ splitmix64_mix(trial_index);
}

}  // namespace clustp
