#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "voteflow/profile.hpp"
#include "voteflow/rng.hpp"
#include "voteflow/rules.hpp"

namespace voteflow {

// Zipf(s) item stream over universe {1..universe_size}: P(rank r) ~ r^-s.
class ZipfGenerator {
 public:
  ZipfGenerator(std::uint64_t universe_size, double exponent, std::uint64_t seed);
  std::uint64_t next();

 private:
  std::vector<double> cumulative_;
  Rng rng_;
};

std::vector<int> random_ranking(int num_candidates, Rng& rng);

// Ranking stream with a planted favorite: with probability top_fraction the
// planted candidate is first and the rest are shuffled; otherwise the whole
// ranking is uniform.
class PlantedRankingGenerator {
 public:
  PlantedRankingGenerator(int num_candidates, int planted, double top_fraction,
                          std::uint64_t seed);
  std::vector<int> next();

 private:
  int num_candidates_;
  int planted_;
  double top_fraction_;
  Rng rng_;
};

struct McGarveyResult {
  Profile profile;
  bool padded = false;                        // targets adjusted to uniform parity
  std::vector<long long> realized_targets;    // row-major m*m, post-padding
};

// Builds an election whose pairwise margins equal the target table exactly
// (two extra canceling votes per unit of margin). Targets must be
// antisymmetric; mixed-parity tables are padded by +1 in magnitude on the
// off-parity entries and the adjustment is reported. The construction is
// verified against pairwise_margins before returning.
McGarveyResult gen_mcgarvey(const std::vector<std::string>& candidates,
                            const std::vector<long long>& targets);

struct MarginCertificate {
  std::string method;          // "plurality-oracle", "scoring-gap", "unanimity", "exact"
  long long mov_lower_bound = 0;
};

// Profile over m candidates and n ballots whose margin of victory under the
// rule is certified to be at least ceil(fraction*n). Throws when no
// certificate strategy applies at the requested scale.
std::pair<Profile, MarginCertificate> gen_margin_election(int m, long long n, const Rule& rule,
                                                          double fraction, std::uint64_t seed);

}  // namespace voteflow
