#pragma once

#include <cstdint>

namespace klucb {

// Platform-independent RNG stack used everywhere randomness is needed.
// std::<random> engines are portable but the distributions are
// implementation-defined, so all sampling is built on raw 64-bit draws.

// SplitMix64 finalizer; also used as the seed/stream hash.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives the seed of an independent stream from a master seed and up to
// two stream indices (replication, arm / sample).
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t a,
                                 std::uint64_t b = 0) {
  return mix64(mix64(master ^ mix64(a + 1)) ^ mix64(b + 0x517cc1b727220a95ULL));
}

// xoshiro256** by Blackman & Vigna (public domain reference implementation).
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) {
    // Seed the state through SplitMix64 as recommended by the authors.
    std::uint64_t sm = seed;
    for (auto& word : s_) {
      sm += 0x9e3779b97f4a7c15ULL;
      std::uint64_t z = sm;
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
      word = z ^ (z >> 31);
    }
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53 random mantissa bits.
  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

}  // namespace klucb
