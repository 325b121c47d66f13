#include "voteflow/mov.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace voteflow {

namespace {

std::vector<std::vector<int>> all_rankings(int m) {
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

struct ChangeChecker {
  const Profile& profile;
  const Rule& rule;
  MovSemantics semantics;
  int base_winner;

  bool changed(const Profile& modified) const {
    switch (semantics) {
      case MovSemantics::TieBrokenDiffers:
        return evaluate_rule(modified, rule).winner != base_winner;
      case MovSemantics::NotUniqueWinner: {
        std::vector<int> w = winner_set(modified, rule);
        return w.size() != 1 || w[0] != base_winner;
      }
      case MovSemantics::NotCoWinner: {
        std::vector<int> w = winner_set(modified, rule);
        return std::find(w.begin(), w.end(), base_winner) == w.end();
      }
    }
    return false;
  }
};

// Enumerates multisets of `t` replacement rankings (combinations with
// repetition over all m! orders), invoking fn on each.
template <typename Fn>
bool for_each_replacement(const std::vector<std::vector<int>>& rankings, int t,
                          std::vector<int>& chosen, std::size_t from, Fn&& fn) {
  if (t == 0) return fn(chosen);
  for (std::size_t i = from; i < rankings.size(); ++i) {
    chosen.push_back(static_cast<int>(i));
    if (for_each_replacement(rankings, t - 1, chosen, i, fn)) return true;
    chosen.pop_back();
  }
  return false;
}

// Enumerates which votes to remove as counts per distinct vote type.
template <typename Fn>
bool for_each_removal(const std::vector<long long>& type_counts, int t,
                      std::vector<int>& removal, std::size_t idx, Fn&& fn) {
  if (t == 0) return fn(removal);
  if (idx == type_counts.size()) return false;
  int cap = static_cast<int>(std::min<long long>(type_counts[idx], t));
  for (int take = 0; take <= cap; ++take) {
    removal[idx] = take;
    if (for_each_removal(type_counts, t - take, removal, idx + 1, fn)) return true;
  }
  removal[idx] = 0;
  return false;
}

}  // namespace

long long exact_mov(const Profile& profile, const Rule& rule, MovSemantics semantics,
                    MovLimits limits) {
  const int m = profile.num_candidates();
  const long long n = profile.total_weight();
  if (!profile.unit_weights())
    throw std::invalid_argument("exact_mov requires an unweighted profile");
  if (m > limits.max_candidates || n > limits.max_votes)
    throw std::invalid_argument("instance exceeds brute-force limits");
  if (m < 2) throw std::domain_error("margin of victory is undefined for a single candidate");
  if (n == 0) throw std::domain_error("margin of victory is undefined for an empty profile");

  // Group identical votes so removals enumerate multisets, not index subsets.
  std::map<std::vector<int>, long long> groups;
  for (const Vote& v : profile.votes()) groups[v.ranking] += 1;
  std::vector<std::vector<int>> types;
  std::vector<long long> type_counts;
  for (auto& [ranking, count] : groups) {
    types.push_back(ranking);
    type_counts.push_back(count);
  }

  ChangeChecker checker{profile, rule, semantics, evaluate_rule(profile, rule).winner};
  if (semantics != MovSemantics::TieBrokenDiffers) {
    std::vector<int> w = winner_set(profile, rule);
    if (w.size() != 1 || w[0] != checker.base_winner) return 0;
  }

  const std::vector<std::vector<int>> rankings = all_rankings(m);
  std::vector<Vote> scratch;
  scratch.reserve(profile.votes().size());

  for (int t = 1; t <= n; ++t) {
    std::vector<int> removal(types.size(), 0);
    std::vector<int> chosen;
    bool found = for_each_removal(type_counts, t, removal, 0, [&](const std::vector<int>& rem) {
      scratch.clear();
      for (std::size_t g = 0; g < types.size(); ++g) {
        long long keep = type_counts[g] - rem[g];
        for (long long i = 0; i < keep; ++i) scratch.push_back({types[g], 1});
      }
      const std::size_t base_size = scratch.size();
      std::vector<int> picks;
      return for_each_replacement(rankings, t, picks, 0, [&](const std::vector<int>& sel) {
        scratch.resize(base_size);
        for (int idx : sel) scratch.push_back({rankings[idx], 1});
        Profile modified(profile.candidates(), scratch);
        return checker.changed(modified);
      });
    });
    if (found) return t;
  }
  throw std::logic_error("no modification changed the winner");  // unreachable for m >= 2
}

long long plurality_mov_oracle(const Profile& profile) {
  const int m = profile.num_candidates();
  const long long n = profile.total_weight();
  if (m < 2 || n == 0) throw std::domain_error("margin of victory needs m >= 2 and n >= 1");

  std::vector<long long> s(m, 0);
  for (const Vote& v : profile.votes()) s[v.ranking[0]] += v.weight;

  auto tie_broken_max = [&](const std::vector<long long>& scores) {
    int best = 0;
    for (int c = 1; c < m; ++c)
      if (scores[c] > scores[best] ||
          (scores[c] == scores[best] && profile.lex_before(c, best)))
        best = c;
    return best;
  };

  const int w = tie_broken_max(s);
  long long best = n;
  std::vector<long long> scratch(m);
  for (int c = 0; c < m; ++c) {
    if (c == w) continue;
    for (long long t = 0; t <= s[w]; ++t) {
      scratch = s;
      scratch[w] -= t;
      scratch[c] += t;
      if (tie_broken_max(scratch) == c) {
        best = std::min(best, t);
        break;
      }
    }
  }
  return best;
}

long long bucklin_delta(const Profile& profile) {
  if (!profile.unit_weights())
    throw std::invalid_argument("bucklin_delta requires an unweighted profile");
  BucklinDepthTable t = bucklin_depths(profile);
  const int m = t.m;
  const long long n = t.n;
  const int w = evaluate_rule(profile, Rule::bucklin()).winner;

  bool found = false;
  long long delta = 0;
  for (int depth = 1; depth <= m - 1; ++depth) {
    if (2 * t.count(w, depth) <= n) continue;
    for (int x = 0; x < m; ++x) {
      if (x == w || 2 * t.count(x, depth) > n) continue;
      long long cand = t.count(w, depth) - t.count(x, depth) + 1;
      if (!found || cand < delta) delta = cand;
      found = true;
    }
  }
  if (!found) throw std::domain_error("no qualifying (depth, challenger) pair");
  return delta;
}

Rat CopelandMarginReport::shifted_score(int x, long long t) const {
  Rat s(0);
  for (int y = 0; y < m; ++y) {
    if (y == x) continue;
    long long d = margins(y, x);
    if (d < 2 * t)
      s += Rat(1);
    else if (d == 2 * t)
      s += alpha;
  }
  return s;
}

CopelandMarginReport copeland_margins(const Profile& profile, Rat alpha) {
  CopelandMarginReport rep;
  rep.m = profile.num_candidates();
  rep.alpha = alpha;
  rep.margins = pairwise_margins(profile);
  rep.winner = evaluate_rule(profile, Rule::copeland(alpha)).winner;
  rep.rm.assign(static_cast<std::size_t>(rep.m) * rep.m, 0);

  const long long bound = profile.total_weight() / 2 + 1;
  for (int x = 0; x < rep.m; ++x) {
    for (int y = 0; y < rep.m; ++y) {
      if (x == y) continue;
      // Minimum integer t with s'_{-t}(x) <= s'_t(y); s'_t(y) is nondecreasing
      // and s'_{-t}(x) nonincreasing in t, and t = n/2 + 1 always satisfies it.
      long long rm = bound;
      for (long long t = -bound; t <= bound; ++t) {
        if (rep.shifted_score(x, -t) <= rep.shifted_score(y, t)) {
          rm = t;
          break;
        }
      }
      rep.rm[static_cast<std::size_t>(x) * rep.m + y] = rm;
    }
  }

  bool first = true;
  for (int x = 0; x < rep.m; ++x) {
    if (x == rep.winner) continue;
    long long v = rep.rm_at(rep.winner, x);
    if (first || v < rep.gamma) rep.gamma = v;
    first = false;
  }
  if (first) rep.gamma = 0;  // m == 1
  return rep;
}

}  // namespace voteflow
