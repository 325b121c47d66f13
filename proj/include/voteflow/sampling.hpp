#pragma once

#include <cstdint>

#include "voteflow/profile.hpp"
#include "voteflow/rng.hpp"
#include "voteflow/rules.hpp"

namespace voteflow {

struct PredictionParams {
  double epsilon = 0.1;  // in (0,1)
  double delta = 0.1;    // in (0,1)
  std::uint64_t rng_seed = 0;
};

struct MovEstimate {
  double m_bar = 0;          // estimated margin of victory, >= 0
  double c_factor = 0;       // multiplicative factor of the guarantee
  double additive_slack = 0; // epsilon * n
  long long sample_size = 0;
};

// Uniform-with-replacement access to the ballots of a fixed profile (weight-w
// votes are w ballots). Stateless apart from the cumulative weight table;
// safe for concurrent draws with distinct Rngs.
class VoteSource {
 public:
  explicit VoteSource(const Profile& profile);

  int num_candidates() const { return profile_->num_candidates(); }
  long long num_votes() const { return profile_->total_weight(); }
  const Profile& profile() const { return *profile_; }

  const std::vector<int>& draw(Rng& rng) const;

 private:
  const Profile* profile_;
  std::vector<long long> cumulative_;
};

// Votes to sample for winner prediction under the given rule (ceiling applied
// last, natural logarithms). Guarantees: if the election's margin of victory
// is at least epsilon*n, the sampled winner is the true winner with
// probability at least 1-delta.
long long winner_sample_size(const Rule& rule, double epsilon, double delta, int m);

// The rule-independent bound for any homogeneous rule; grows with m!^2.
long long homogeneous_winner_sample_size(double epsilon, double delta, int m);

// Votes to sample for margin-of-victory estimation. Throws for Runoff/STV.
long long mov_sample_size(const Rule& rule, double epsilon, double delta, int m);

// Draws winner_sample_size votes and returns the winner of the sampled
// election under the fixed tie-break.
int predict_winner(const VoteSource& source, const Rule& rule, const PredictionParams& params);

// Draws mov_sample_size votes and forms the rule-specific margin estimate:
// scoring (s(w)-s(z))/(1.5*a1) on the normalized vector, k-approval
// (s(w)-s(z))/2, Bucklin Delta/1.5, maximin (s(w)-s(z))/3, Copeland
// 4(ln m+1)/(2ln m+3) * Gamma. Guarantee: |m_bar - MOV| <= c*MOV + eps*n with
// probability >= 1-delta. Throws for Runoff/STV.
MovEstimate estimate_mov(const VoteSource& source, const Rule& rule,
                         const PredictionParams& params);

}  // namespace voteflow
