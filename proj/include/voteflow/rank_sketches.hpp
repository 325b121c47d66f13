#pragma once

#include <cstdint>
#include <vector>

#include "voteflow/rng.hpp"

namespace voteflow {

// Streaming Borda scores over rankings of a fixed candidate set: subsample
// rankings and keep exact beat-counts on the sample. Estimates land within
// eps*m*n of the true scores (m = stream length, n = candidates) with
// probability >= 1-delta.
class BordaSketch {
 public:
  BordaSketch(int num_candidates, std::uint64_t stream_len, double epsilon, double delta,
              std::uint64_t seed, double budget_scale = 1.0);

  void insert(const std::vector<int>& ranking);

  std::vector<double> report() const;              // per-candidate scaled estimates
  std::vector<int> report_list(double phi) const;  // estimates >= (phi - eps/2)*m*n

  long long sampled_count() const { return sampled_; }
  int num_candidates() const { return num_candidates_; }

 private:
  int num_candidates_;
  std::uint64_t stream_len_;
  double epsilon_;
  int sample_exponent_;
  std::vector<long long> beat_counts_;
  long long sampled_ = 0;
  Rng rng_;
};

// Streaming maximin scores: subsample rankings, keep the pairwise win-count
// matrix on the sample, report margin-based maximin estimates within eps*m.
class MaximinSketch {
 public:
  MaximinSketch(int num_candidates, std::uint64_t stream_len, double epsilon, double delta,
                std::uint64_t seed, double budget_scale = 1.0);

  void insert(const std::vector<int>& ranking);

  std::vector<double> report() const;
  std::vector<int> report_list(double phi) const;  // estimates >= (phi - eps/2)*m
  double margin_estimate(int x, int y) const;      // scaled pairwise margin

  long long sampled_count() const { return sampled_; }
  int num_candidates() const { return num_candidates_; }

 private:
  int num_candidates_;
  std::uint64_t stream_len_;
  double epsilon_;
  int sample_exponent_;
  std::vector<long long> wins_;  // row-major n x n, wins_[x][y] = #sampled rankings with x above y
  long long sampled_ = 0;
  Rng rng_;
};

}  // namespace voteflow
