#pragma once

#include <vector>

#include "voteflow/rules.hpp"

namespace voteflow {

// What counts as "the winner changed" after modifying votes.
//   TieBrokenDiffers: the tie-broken winner is a different candidate.
//   NotUniqueWinner:  the original winner is no longer the unique winner of
//                     the correspondence (a new tie counts).
//   NotCoWinner:      the original winner left the co-winner set entirely.
// The latter two are undefined for Runoff/STV.
enum class MovSemantics { TieBrokenDiffers, NotUniqueWinner, NotCoWinner };

struct MovLimits {
  int max_candidates = 4;
  long long max_votes = 10;
};

// Minimum number of votes whose replacement (by arbitrary complete rankings)
// changes the winner, by exhaustive search over vote subsets and replacement
// multisets. Requires an unweighted profile within the brute-force limits.
long long exact_mov(const Profile& profile, const Rule& rule,
                    MovSemantics semantics = MovSemantics::TieBrokenDiffers,
                    MovLimits limits = {});

// Minimum t such that moving t ballots from the current plurality winner to
// some challenger makes that challenger the tie-broken winner; minimized over
// challengers by direct simulation. Exact for top-two races; an upper bound
// in general.
long long plurality_mov_oracle(const Profile& profile);

// Bucklin margin quantity: min over depths l in [m-1] with n_l(w) > n/2 and
// challengers x with n_l(x) <= n/2 of n_l(w) - n_l(x) + 1.
// Throws std::domain_error when no (l, x) pair qualifies (e.g. m = 1).
long long bucklin_delta(const Profile& profile);

// Copeland relative-margin report built from exact pairwise margins.
struct CopelandMarginReport {
  int m = 0;
  int winner = -1;
  Rat alpha{0};
  MarginMatrix margins;
  std::vector<long long> rm;  // row-major m*m, rm[x][y] = RM(x,y), diag 0
  long long gamma = 0;        // min over x != winner of RM(winner, x)

  long long rm_at(int x, int y) const { return rm[static_cast<std::size_t>(x) * m + y]; }
  // Shifted score s'_t(V, x): |{y != x : D(y,x) < 2t}| + alpha*|{y != x : D(y,x) = 2t}|.
  Rat shifted_score(int x, long long t) const;
};

CopelandMarginReport copeland_margins(const Profile& profile, Rat alpha = Rat(0));

}  // namespace voteflow
