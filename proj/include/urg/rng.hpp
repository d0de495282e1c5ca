// SPDX-License-Identifier: MIT
//
// Seeded random streams with deterministic cross-platform behaviour.
// Every consumer owns its own RandomStream; independent streams for parallel
// agents/trials are derived from a master seed and a stream id.
#ifndef URG_RNG_HPP
#define URG_RNG_HPP

#include <cstdint>
#include <random>
#include <stdexcept>

namespace urg {

// SplitMix64 step; used for seed mixing and stream derivation.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : eng_(mix_seed(seed)) {}

  // Independent stream keyed by (master, id): distinct ids give streams whose
  // underlying seeds differ by two SplitMix64 scrambles.
  static RandomStream derive(std::uint64_t master, std::uint64_t id) {
    std::uint64_t s = master ^ (0xD1B54A32D192ED03ULL * (id + 1));
    std::uint64_t a = splitmix64(s);
    std::uint64_t b = splitmix64(s);
    return RandomStream(a ^ (b << 1) ^ b);
  }

  std::uint64_t next_u64() { return eng_(); }

  // One fair bit, buffered 64 at a time (MSB-first within each word).
  int next_bit() {
    if (bits_left_ == 0) {
      bit_buf_ = next_u64();
      bits_left_ = 64;
    }
    --bits_left_;
    return static_cast<int>((bit_buf_ >> bits_left_) & 1u);
  }

  // Unbiased integer in [0, bound) by masked rejection.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    if (bound == 1) return 0;
    std::uint64_t mask = ~0ULL >> countl_zero_u64(bound - 1);
    for (;;) {
      std::uint64_t v = next_u64() & mask;
      if (v < bound) return v;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double next_unit() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

 private:
  static std::uint64_t mix_seed(std::uint64_t seed) {
    std::uint64_t s = seed;
    return splitmix64(s);
  }
  static int countl_zero_u64(std::uint64_t v) {
    int n = 0;
    for (std::uint64_t probe = 1ULL << 63; probe && !(v & probe); probe >>= 1) ++n;
    return n;
  }

  std::mt19937_64 eng_;
  std::uint64_t bit_buf_ = 0;
  int bits_left_ = 0;
};

}  // namespace urg

#endif  // URG_RNG_HPP
