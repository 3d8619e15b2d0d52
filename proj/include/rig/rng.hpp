#pragma once

#include <cstdint>

namespace rig {

// SplitMix64 (Steele, Lea & Flood). The generator and the per-trial stream
// derivation are fixed here so that a (seed, trials) pair reproduces the
// same results on any platform, compiler, or thread count.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // 53-bit uniform draw in [0, 1).
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Sub-stream for trial `trial` of a run seeded with `seed`. Trials own
// disjoint streams, so scheduling them across threads changes nothing.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ull * (trial + 1)));
}

}  // namespace rig
