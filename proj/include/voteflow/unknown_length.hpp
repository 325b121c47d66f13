#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <stdexcept>

#include "voteflow/morris.hpp"
#include "voteflow/rng.hpp"

namespace voteflow {

// Runs known-length sketch instances against a geometric schedule of length
// guesses (1/eps)^2, (1/eps)^3, ... so a stream of undeclared length is
// always covered by the older of at most two live instances. Length-threshold
// crossings are detected with a high-precision Morris counter, so the space
// devoted to position tracking stays loglog-sized.
//
// The factory builds a fresh sketch assuming a given stream length; it should
// inflate the sketch's sample budget by ~1/(6*eps) so the window's lower end
// still has enough samples (the convenience constructors in the CLI and tests
// do this via the sketches' budget_scale parameter).
template <class Sketch>
class UnknownLengthStream {
 public:
  using Factory = std::function<Sketch(std::uint64_t assumed_len, std::uint64_t seed)>;

  UnknownLengthStream(Factory factory, double epsilon, double delta, std::uint64_t seed,
                      double log2_max_len = 63.0)
      : factory_(std::move(factory)),
        inv_eps_(1.0 / epsilon),
        seed_(seed),
        morris_(static_cast<int>(std::ceil(2.0 * std::log2(log2_max_len / delta)))),
        rng_(splitmix64(seed) ^ 0x6d6f727269736363ULL) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0,1)");
    instances_.push_back(make_instance(0));
    peak_live_ = 1;
  }

  template <class Item>
  void insert(const Item& x) {
    morris_.increment(rng_);
    while (morris_.estimate() > spawn_threshold()) {
      instances_.push_back(make_instance(next_index_));
      ++next_index_;
      if (instances_.size() > 2) instances_.pop_front();  // retire the expired window
      peak_live_ = std::max(peak_live_, static_cast<int>(instances_.size()));
    }
    for (Instance& inst : instances_) inst.sketch.insert(x);
  }

  // The older live instance; its guess window contains the current length.
  const Sketch& reporting_instance() const { return instances_.front().sketch; }
  std::uint64_t reporting_assumed_length() const { return instances_.front().assumed_len; }

  int live_instances() const { return static_cast<int>(instances_.size()); }
  int peak_live_instances() const { return peak_live_; }
  double length_estimate() const { return morris_.estimate(); }

 private:
  struct Instance {
    std::uint64_t assumed_len;
    Sketch sketch;
  };

  // Instance k assumes length (1/eps)^(k+2) and covers [(1/eps)^(k+1), (1/eps)^(k+2)].
  Instance make_instance(int k) {
    double assumed = std::pow(inv_eps_, k + 2);
    std::uint64_t len = assumed >= 9.0e18 ? static_cast<std::uint64_t>(9.0e18)
                                          : static_cast<std::uint64_t>(std::ceil(assumed));
    return {len, factory_(len, splitmix64(seed_ ^ splitmix64(static_cast<std::uint64_t>(k) + 17)))};
  }

  // Instance k spawns when the length estimate first exceeds (1/eps)^k.
  double spawn_threshold() const { return std::pow(inv_eps_, next_index_); }

  Factory factory_;
  double inv_eps_;
  std::uint64_t seed_;
  MorrisCounter morris_;
  Rng rng_;
  std::deque<Instance> instances_;
  int next_index_ = 1;
  int peak_live_ = 1;
};

}  // namespace voteflow
