#pragma once

#include <cstdint>
#include <random>

namespace voteflow {

// SplitMix64 finalizer. Used both as a seed scrambler and to derive
// per-trial substreams from (seed, stream id) without correlation.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seedable generator with portable helpers. The std distribution objects are
// implementation-defined, so bounded draws use explicit rejection sampling
// and unit doubles take the top 53 bits; results are identical wherever
// mt19937_64 is identical.
//
// Substream scheme: stream i of seed s is seeded with
// splitmix64(s ^ splitmix64(i + 1)).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(seed ^ splitmix64(stream + 1));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Single fair bit; consumes one word per 64 bits.
  bool next_bit() {
    if (bits_left_ == 0) {
      bit_buffer_ = next_u64();
      bits_left_ = 64;
    }
    bool b = bit_buffer_ & 1;
    bit_buffer_ >>= 1;
    --bits_left_;
    return b;
  }

  // Uniform in [0, bound), bound >= 1, unbiased via rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = -bound % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t r = next_u64();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform double in [0, 1) with 53 bits of precision.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return next_unit() < p;
  }

 private:
  std::mt19937_64 engine_;
  std::uint64_t bit_buffer_ = 0;
  int bits_left_ = 0;
};

}  // namespace voteflow
