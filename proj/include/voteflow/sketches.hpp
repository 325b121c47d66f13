#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "voteflow/hashing.hpp"
#include "voteflow/misra_gries.hpp"
#include "voteflow/rng.hpp"

namespace voteflow {

struct HHItem {
  std::uint64_t item = 0;
  double estimate = 0;  // scaled to full-stream units
};

// Single-pass list-heavy-hitters sketch: subsample the stream, run a
// Misra-Gries table over hashed ids, and keep the true ids of the top
// ceil(1/phi) hashed keys. With probability >= 1-delta the report contains
// every item of frequency >= phi*m, no item below (phi-eps)*m, and estimates
// within eps*m.
//
// Sampling rates are floored to reciprocal powers of two and drawn via the
// all-zero-bits trick. budget_scale multiplies the sample budget; the
// unknown-length wrapper uses it.
class SimpleHHSketch {
 public:
  SimpleHHSketch(std::uint64_t universe, std::uint64_t stream_len, double epsilon, double phi,
                 double delta, std::uint64_t seed, double budget_scale = 1.0);

  void insert(std::uint64_t item);

  // Tracked ids with scaled estimates, thresholded at (phi - eps/2) of the
  // sampled length. Throws if nothing was sampled.
  std::vector<HHItem> report() const;

  // Tracked ids ordered consistently with the hashed table entries they
  // shadow (highest value first), no threshold applied.
  std::vector<HHItem> tracked() const;

  long long sampled_count() const { return sampled_; }
  double sample_rate() const { return sample_rate_; }
  std::uint64_t declared_length() const { return stream_len_; }
  const MisraGries& hashed_table() const { return t1_; }
  std::size_t tracked_capacity() const { return track_capacity_; }

 private:
  void refresh_tracking(std::uint64_t item, std::uint64_t key);
  double scale() const;

  std::uint64_t stream_len_;
  double epsilon_, phi_;
  int sample_exponent_;
  double sample_rate_;
  HashFn hash_;
  MisraGries t1_;
  std::size_t track_capacity_;
  std::unordered_map<std::uint64_t, std::uint64_t> ids_;  // hashed key -> true id
  long long sampled_ = 0;
  Rng rng_;
};

// Same machinery with a single tracked id: returns an item whose frequency is
// within eps*m of the maximum with probability >= 1-delta.
class EpsMaximumSketch {
 public:
  EpsMaximumSketch(std::uint64_t universe, std::uint64_t stream_len, double epsilon, double delta,
                   std::uint64_t seed, double budget_scale = 1.0);

  void insert(std::uint64_t item) { inner_.insert(item); }
  std::uint64_t report() const;  // throws if nothing was sampled
  double report_estimate() const;
  long long sampled_count() const { return inner_.sampled_count(); }

 private:
  SimpleHHSketch inner_;
};

// Tuning constants for the optimal-space list sketch. Defaults follow the
// analysis; they are deliberately generous and can be scaled down for
// desk-size streams (the acceptance harness documents a reduced profile).
struct OptimalHHConfig {
  double sample_budget_factor = 1e5;  // budget = factor / eps^2
  double repetition_factor = 200.0;   // repetitions = ceil(factor * log2(12/phi))
  double row_factor = 100.0;          // rows = ceil(factor / eps)
  double epoch_scale = 1e-6;          // epoch t = floor(log2(scale * c^2))
};

// Optimal-space list heavy hitters: Misra-Gries over true ids for candidates,
// plus per-repetition subsampled row counters whose value selects an epoch,
// and per-epoch accelerated counters whose increment rate rises with the
// epoch. Estimates are medians across repetitions. Succeeds with constant
// probability.
class OptimalHHSketch {
 public:
  OptimalHHSketch(std::uint64_t universe, std::uint64_t stream_len, double epsilon, double phi,
                  std::uint64_t seed, OptimalHHConfig config = {});

  void insert(std::uint64_t item);
  std::vector<HHItem> report() const;  // threshold (phi - eps/2) * sampled

  long long sampled_count() const { return sampled_; }
  std::size_t candidate_table_size() const { return t1_.size(); }
  std::size_t max_candidate_table_size() const { return max_t1_size_; }
  std::size_t candidate_table_capacity() const { return t1_.capacity(); }
  std::size_t epoch_entries() const { return t3_.size(); }
  long long subsample_cell_total() const;
  int repetitions() const { return repetitions_; }

 private:
  double estimate_for(std::uint64_t item) const;

  std::uint64_t stream_len_;
  double epsilon_, phi_;
  int sample_exponent_;
  int rate_exponent_;  // floored eps used for row counters and epoch rates
  int repetitions_;
  std::size_t rows_;
  int max_epoch_;
  double epoch_scale_;
  MisraGries t1_;
  std::vector<HashFn> hashes_;
  std::vector<std::uint64_t> t2_;                      // rows x repetitions
  std::unordered_map<std::uint64_t, long long> t3_;    // (row, rep, epoch) -> count
  long long sampled_ = 0;
  std::size_t max_t1_size_ = 0;
  Rng rng_;
};

// Minimum-frequency sketch over a known universe. For universes of size at
// least 1/((1-delta)*eps) a uniformly pre-chosen item among the first
// ceil(1/((1-delta)*eps)) is already a valid answer; otherwise a presence bit
// vector, an exact map while the distinct count stays below
// 1/(eps*log2(1/eps)), and a capped counter map cover the three regimes.
class MinimumSketch {
 public:
  MinimumSketch(std::vector<std::uint64_t> universe, std::uint64_t stream_len, double epsilon,
                double delta, std::uint64_t seed, double budget_scale = 1.0);

  void insert(std::uint64_t item);
  std::uint64_t report() const;

  bool large_universe_shortcut() const { return shortcut_item_ != kNoItem; }
  bool exact_map_active() const;
  long long distinct_count() const { return distinct_; }

 private:
  static constexpr std::uint64_t kNoItem = ~0ULL;

  std::vector<std::uint64_t> universe_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
  std::uint64_t shortcut_item_ = kNoItem;

  int k1_ = 0, k2_ = 0, k3_ = 0;  // sampling exponents for the three levels
  double s2_distinct_limit_ = 0;
  long long s3_cap_ = 0;

  std::vector<char> s1_present_;
  std::vector<long long> s2_counts_;  // -1 = absent
  std::vector<long long> s3_counts_;  // -1 = absent
  std::vector<char> seen_;
  long long distinct_ = 0;
  Rng rng_;
};

}  // namespace voteflow
