#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace voteflow {

// A ranking is a complete permutation of candidate indices, most preferred
// first. Weights are positive integers; a weight-w vote counts as w ballots.
struct Vote {
  std::vector<int> ranking;
  long long weight = 1;
};

class VoteFileError : public std::runtime_error {
 public:
  VoteFileError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Immutable preference profile: a candidate set plus a multiset of complete
// rankings. All operations downstream treat it as read-only, so instances can
// be shared freely across threads.
class Profile {
 public:
  Profile(std::vector<std::string> candidates, std::vector<Vote> votes);

  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  long long total_weight() const { return total_weight_; }
  const std::vector<std::string>& candidates() const { return candidates_; }
  const std::vector<Vote>& votes() const { return votes_; }
  const std::string& candidate_name(int c) const { return candidates_[c]; }
  int candidate_index(std::string_view name) const;  // -1 if unknown

  bool unit_weights() const { return unit_weights_; }

  // Fixed tie-break order: lexicographic over candidate identifiers.
  // lex_rank(c) is c's position in that order; lex_before(a, b) compares it.
  int lex_rank(int c) const { return lex_rank_[c]; }
  bool lex_before(int a, int b) const { return lex_rank_[a] < lex_rank_[b]; }

 private:
  std::vector<std::string> candidates_;
  std::vector<Vote> votes_;
  std::vector<int> lex_rank_;
  long long total_weight_ = 0;
  bool unit_weights_ = true;
};

// Parses the vote-file format:
//   candidates: a,b,c
//   a>b>c
//   3: b>a>c        # weighted line; '#' starts a comment
// Every ranking must be a complete permutation of the declared candidates.
// Malformed lines raise VoteFileError carrying the 1-based line number.
Profile parse_profile(std::string_view text);

// Inverse of parse_profile up to whitespace; parse_profile(emit_profile(p))
// reproduces p exactly (candidate order, vote order, weights).
std::string emit_profile(const Profile& profile);

Profile load_profile_file(const std::string& path);

}  // namespace voteflow
