#pragma once

// Reference voting-rule evaluator, transcribed directly from the rule
// definitions and kept independent of the library's evaluation paths: it
// works on raw string rankings, recomputes every count by scanning, and
// carries its own tie-breaking. Used as the equivalence oracle in tests.

#include <optional>
#include <string>
#include <vector>

namespace refrules {

struct RefElection {
  std::vector<std::string> candidates;
  std::vector<std::vector<std::string>> rankings;  // most preferred first
  std::vector<long long> weights;
};

struct Fraction {
  long long num = 0;
  long long den = 1;
};

struct RefOutcome {
  std::string winner;
  std::vector<Fraction> scores;  // aligned with election.candidates
};

RefOutcome plurality(const RefElection& e);
RefOutcome veto(const RefElection& e);
RefOutcome k_approval(const RefElection& e, int k);
RefOutcome k_veto(const RefElection& e, int k);
RefOutcome borda(const RefElection& e);
RefOutcome scoring(const RefElection& e, const std::vector<Fraction>& alphas);
RefOutcome maximin(const RefElection& e);
RefOutcome copeland(const RefElection& e, Fraction alpha);
RefOutcome simplified_bucklin(const RefElection& e);
RefOutcome plurality_runoff(const RefElection& e);
RefOutcome stv(const RefElection& e);

std::optional<std::string> condorcet(const RefElection& e);

}  // namespace refrules
