#pragma once
// Counter-based SplitMix64 generator. Every draw is a pure function of
// (seed, counter), so sampling loops can be reordered or parallelized without
// changing the stream, and runs are bit-reproducible by construction.

#include <cstdint>

namespace kawalab {

struct SplitMix64 {
  std::uint64_t seed;

  explicit SplitMix64(std::uint64_t seed_ = 42) : seed(seed_) {}

  // k-th raw 64-bit output of the stream.
  std::uint64_t at(std::uint64_t counter) const {
    std::uint64_t z = seed + (counter + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in [0,1) from the top 53 bits.
  double uniform01(std::uint64_t counter) const {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }

  // Uniform double in [lo,hi).
  double uniform(std::uint64_t counter, double lo, double hi) const {
    return lo + (hi - lo) * uniform01(counter);
  }
};

}  // namespace kawalab
