#pragma once

#include <cstdint>

#include "voteflow/rng.hpp"

namespace voteflow {

// Largest reciprocal power of two <= p, so p/2 < result <= p. Sampling rates
// are floored through this before use so selection can run on raw fair bits.
double floor_prob_to_power_of_two(double p);

// Exponent k of the floored rate: floor_prob_to_power_of_two(p) == 2^-k.
int floor_prob_exponent(double p);

// True with probability 2^-log2m, by drawing log2m fair bits and accepting
// only the all-zero outcome. State is a running OR plus a bit counter.
bool low_space_select(int log2m, Rng& rng);

// Member of the Carter-Wegman family x -> ((a*x + b) mod p) mod range + 1,
// with p the smallest prime >= domain. Outputs lie in [1, range].
struct HashFn {
  std::uint64_t a = 1;
  std::uint64_t b = 0;
  std::uint64_t prime = 2;
  std::uint64_t range = 1;

  std::uint64_t operator()(std::uint64_t x) const;
};

HashFn draw_universal_hash(std::uint64_t domain, std::uint64_t range, Rng& rng);

// Smallest prime >= x (x <= 2^62); deterministic Miller-Rabin.
std::uint64_t next_prime(std::uint64_t x);

}  // namespace voteflow
