#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "voteflow/profile.hpp"
#include "voteflow/rational.hpp"

namespace voteflow {

// Positional score vector; nonincreasing with alpha_1 > alpha_m.
struct ScoreVector {
  std::vector<Rat> alphas;

  void validate() const;
  // Shifted so the last entry is zero (winners are unchanged).
  ScoreVector normalized() const;
};

enum class RuleKind {
  Plurality,
  Veto,
  KApproval,
  KVeto,
  Scoring,
  Borda,
  Maximin,
  Copeland,
  Bucklin,  // simplified Bucklin
  Runoff,   // plurality with runoff
  Stv,
};

struct Rule {
  RuleKind kind = RuleKind::Plurality;
  int k = 1;                  // KApproval / KVeto
  Rat copeland_alpha{0};      // Copeland, in [0,1]
  ScoreVector score_vector;   // Scoring

  static Rule plurality() { return {RuleKind::Plurality}; }
  static Rule veto() { return {RuleKind::Veto}; }
  static Rule k_approval(int k) { return {RuleKind::KApproval, k}; }
  static Rule k_veto(int k) { return {RuleKind::KVeto, k}; }
  static Rule scoring(ScoreVector sv) { return {RuleKind::Scoring, 1, Rat(0), std::move(sv)}; }
  static Rule borda() { return {RuleKind::Borda}; }
  static Rule maximin() { return {RuleKind::Maximin}; }
  static Rule copeland(Rat alpha = Rat(0)) { return {RuleKind::Copeland, 1, alpha}; }
  static Rule bucklin() { return {RuleKind::Bucklin}; }
  static Rule runoff() { return {RuleKind::Runoff}; }
  static Rule stv() { return {RuleKind::Stv}; }

  std::string name() const;
  bool is_scoring_family() const;
};

Rule rule_from_name(const std::string& name, int k = 1, Rat copeland_alpha = Rat(0));

// Antisymmetric pairwise margin table: d(x,y) = (weight preferring x over y)
// minus (weight preferring y over x).
struct MarginMatrix {
  int m = 0;
  std::vector<long long> d;  // row-major m*m

  long long operator()(int x, int y) const { return d[static_cast<std::size_t>(x) * m + y]; }
  long long& at(int x, int y) { return d[static_cast<std::size_t>(x) * m + y]; }
};

MarginMatrix pairwise_margins(const Profile& profile);

// Candidate defeating every other candidate pairwise, if any.
std::optional<int> condorcet_winner(const Profile& profile);

// counts[x][l-1] = total weight of votes ranking x within the top l positions.
struct BucklinDepthTable {
  int m = 0;
  long long n = 0;
  std::vector<std::vector<long long>> counts;

  long long count(int candidate, int depth) const { return counts[candidate][depth - 1]; }
  // Smallest l such that some candidate clears n/2 within the top l; m if none.
  int winning_depth() const;
};

BucklinDepthTable bucklin_depths(const Profile& profile);

struct ElectionResult {
  int winner = -1;
  std::vector<Rat> scores;

  // Rule-specific traces; empty/defaulted when not applicable.
  std::vector<int> elimination_order;          // STV, in round order
  int bucklin_depth = 0;                       // Bucklin winning depth
  std::array<int, 2> runoff_finalists{-1, -1};
};

// Exact evaluation under the fixed lexicographic tie-break. Winner selection:
// maximum score, except Bucklin (minimum winning depth) and STV/runoff
// (procedure survivor). Throws std::invalid_argument for out-of-range k.
ElectionResult evaluate_rule(const Profile& profile, const Rule& rule);

// Winner set of the underlying voting correspondence (before tie-breaking).
// Not defined for Runoff/STV, whose procedures embed the tie-break.
std::vector<int> winner_set(const Profile& profile, const Rule& rule);

ElectionResult stv_trace(const Profile& profile);

// The concrete score vector a rule family induces for m candidates.
ScoreVector scoring_vector_for(const Rule& rule, int m);

}  // namespace voteflow
