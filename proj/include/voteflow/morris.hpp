#pragma once

#include <cmath>
#include <cstdint>

#include "voteflow/rng.hpp"

namespace voteflow {

// Probabilistic counter holding only an exponent register. With the default
// precision the register C is incremented with probability 2^-C and the
// estimate 2^C - 1 is unbiased for the number of increments.
//
// precision_bits = k generalizes to base 1 + 2^-k: the register grows with
// probability base^-C and the estimate stays unbiased while the relative
// variance shrinks by ~2^-k. The length-estimation wrapper uses this.
class MorrisCounter {
 public:
  MorrisCounter() = default;
  explicit MorrisCounter(int precision_bits)
      : scale_(std::ldexp(1.0, precision_bits)) {}

  void increment(Rng& rng) {
    if (rng.bernoulli(std::pow(1.0 + 1.0 / scale_, -static_cast<double>(c_)))) ++c_;
  }

  double estimate() const { return scale_ * (std::pow(1.0 + 1.0 / scale_, static_cast<double>(c_)) - 1.0); }

  std::uint64_t register_value() const { return c_; }

 private:
  std::uint64_t c_ = 0;
  double scale_ = 1.0;
};

}  // namespace voteflow
