#include "voteflow/rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace voteflow {

void ScoreVector::validate() const {
  if (alphas.size() < 1) throw std::invalid_argument("score vector is empty");
  for (std::size_t i = 1; i < alphas.size(); ++i) {
    if (alphas[i - 1] < alphas[i])
      throw std::invalid_argument("score vector must be nonincreasing");
  }
  if (alphas.front() <= alphas.back())
    throw std::invalid_argument("score vector must satisfy alpha_1 > alpha_m");
}

ScoreVector ScoreVector::normalized() const {
  ScoreVector out;
  out.alphas.reserve(alphas.size());
  for (const Rat& a : alphas) out.alphas.push_back(a - alphas.back());
  return out;
}

std::string Rule::name() const {
  switch (kind) {
    case RuleKind::Plurality: return "plurality";
    case RuleKind::Veto: return "veto";
    case RuleKind::KApproval: return std::to_string(k) + "-approval";
    case RuleKind::KVeto: return std::to_string(k) + "-veto";
    case RuleKind::Scoring: return "scoring";
    case RuleKind::Borda: return "borda";
    case RuleKind::Maximin: return "maximin";
    case RuleKind::Copeland: return "copeland";
    case RuleKind::Bucklin: return "bucklin";
    case RuleKind::Runoff: return "runoff";
    case RuleKind::Stv: return "stv";
  }
  return "?";
}

bool Rule::is_scoring_family() const {
  switch (kind) {
    case RuleKind::Plurality:
    case RuleKind::Veto:
    case RuleKind::KApproval:
    case RuleKind::KVeto:
    case RuleKind::Scoring:
    case RuleKind::Borda:
      return true;
    default:
      return false;
  }
}

Rule rule_from_name(const std::string& name, int k, Rat copeland_alpha) {
  if (name == "plurality") return Rule::plurality();
  if (name == "veto") return Rule::veto();
  if (name == "k-approval" || name == "kapproval") return Rule::k_approval(k);
  if (name == "k-veto" || name == "kveto") return Rule::k_veto(k);
  if (name == "borda") return Rule::borda();
  if (name == "maximin") return Rule::maximin();
  if (name == "copeland") return Rule::copeland(copeland_alpha);
  if (name == "bucklin") return Rule::bucklin();
  if (name == "runoff") return Rule::runoff();
  if (name == "stv") return Rule::stv();
  throw std::invalid_argument("unknown rule: " + name);
}

MarginMatrix pairwise_margins(const Profile& profile) {
  const int m = profile.num_candidates();
  MarginMatrix mm;
  mm.m = m;
  mm.d.assign(static_cast<std::size_t>(m) * m, 0);
  std::vector<int> pos(m);
  for (const Vote& v : profile.votes()) {
    for (int i = 0; i < m; ++i) pos[v.ranking[i]] = i;
    for (int x = 0; x < m; ++x) {
      for (int y = x + 1; y < m; ++y) {
        long long sign = pos[x] < pos[y] ? v.weight : -v.weight;
        mm.at(x, y) += sign;
        mm.at(y, x) -= sign;
      }
    }
  }
  return mm;
}

std::optional<int> condorcet_winner(const Profile& profile) {
  const int m = profile.num_candidates();
  if (m == 1) return 0;
  MarginMatrix d = pairwise_margins(profile);
  for (int x = 0; x < m; ++x) {
    bool beats_all = true;
    for (int y = 0; y < m && beats_all; ++y)
      if (y != x && d(x, y) <= 0) beats_all = false;
    if (beats_all) return x;
  }
  return std::nullopt;
}

BucklinDepthTable bucklin_depths(const Profile& profile) {
  const int m = profile.num_candidates();
  BucklinDepthTable t;
  t.m = m;
  t.n = profile.total_weight();
  t.counts.assign(m, std::vector<long long>(m, 0));
  for (const Vote& v : profile.votes())
    for (int depth = 1; depth <= m; ++depth) t.counts[v.ranking[depth - 1]][depth - 1] += v.weight;
  for (int c = 0; c < m; ++c)
    for (int depth = 1; depth < m; ++depth) t.counts[c][depth] += t.counts[c][depth - 1];
  return t;
}

int BucklinDepthTable::winning_depth() const {
  for (int depth = 1; depth <= m; ++depth)
    for (int c = 0; c < m; ++c)
      if (2 * count(c, depth) > n) return depth;
  return m;
}

namespace {

// Lexicographically first candidate among score maximizers.
int pick_winner(const Profile& profile, const std::vector<Rat>& scores) {
  int best = 0;
  for (int c = 1; c < profile.num_candidates(); ++c) {
    if (scores[c] > scores[best] ||
        (scores[c] == scores[best] && profile.lex_before(c, best)))
      best = c;
  }
  return best;
}

std::vector<Rat> positional_scores(const Profile& profile, const ScoreVector& sv) {
  const int m = profile.num_candidates();
  std::vector<Rat> scores(m, Rat(0));
  for (const Vote& v : profile.votes())
    for (int i = 0; i < m; ++i) scores[v.ranking[i]] += Rat(v.weight) * sv.alphas[i];
  return scores;
}

std::vector<Rat> maximin_scores(const MarginMatrix& d) {
  std::vector<Rat> scores(d.m);
  for (int x = 0; x < d.m; ++x) {
    long long worst = 0;
    bool first = true;
    for (int y = 0; y < d.m; ++y) {
      if (y == x) continue;
      if (first || d(x, y) < worst) worst = d(x, y);
      first = false;
    }
    scores[x] = Rat(first ? 0 : worst);
  }
  return scores;
}

std::vector<Rat> copeland_scores(const MarginMatrix& d, const Rat& alpha) {
  std::vector<Rat> scores(d.m, Rat(0));
  for (int x = 0; x < d.m; ++x) {
    for (int y = 0; y < d.m; ++y) {
      if (y == x) continue;
      if (d(x, y) > 0)
        scores[x] += Rat(1);
      else if (d(x, y) == 0)
        scores[x] += alpha;
    }
  }
  return scores;
}

ElectionResult bucklin_result(const Profile& profile) {
  BucklinDepthTable t = bucklin_depths(profile);
  const int m = profile.num_candidates();
  ElectionResult r;
  r.bucklin_depth = t.winning_depth();
  r.scores.assign(m, Rat(0));
  for (int c = 0; c < m; ++c) r.scores[c] = Rat(t.count(c, r.bucklin_depth));
  // Winners are the candidates with majority at the winning depth; with no
  // majority anywhere (n = 0) everyone ties at depth m.
  int best = -1;
  for (int c = 0; c < m; ++c) {
    bool qualifies = 2 * t.count(c, r.bucklin_depth) > t.n;
    if (!qualifies && t.n > 0) continue;
    if (best == -1 || profile.lex_before(c, best)) best = c;
  }
  if (best == -1) best = pick_winner(profile, r.scores);
  r.winner = best;
  return r;
}

ElectionResult runoff_result(const Profile& profile) {
  const int m = profile.num_candidates();
  ElectionResult r;
  r.scores = positional_scores(profile, scoring_vector_for(Rule::plurality(), m));
  int first = pick_winner(profile, r.scores);
  int second = -1;
  for (int c = 0; c < m; ++c) {
    if (c == first) continue;
    if (second == -1 || r.scores[c] > r.scores[second] ||
        (r.scores[c] == r.scores[second] && profile.lex_before(c, second)))
      second = c;
  }
  if (second == -1) {  // m == 1
    r.winner = first;
    r.runoff_finalists = {first, first};
    return r;
  }
  r.runoff_finalists = {first, second};
  MarginMatrix d = pairwise_margins(profile);
  long long margin = d(first, second);
  if (margin > 0)
    r.winner = first;
  else if (margin < 0)
    r.winner = second;
  else
    r.winner = profile.lex_before(first, second) ? first : second;
  return r;
}

}  // namespace

ElectionResult stv_trace(const Profile& profile) {
  const int m = profile.num_candidates();
  ElectionResult r;
  r.scores.assign(m, Rat(0));
  std::vector<char> alive(m, 1);
  std::vector<long long> tally(m);

  for (int round = 0; round < m - 1; ++round) {
    std::fill(tally.begin(), tally.end(), 0);
    for (const Vote& v : profile.votes()) {
      for (int c : v.ranking) {
        if (alive[c]) {
          tally[c] += v.weight;
          break;
        }
      }
    }
    // Least current plurality weight; ties eliminate the lexicographically
    // last candidate.
    int victim = -1;
    for (int c = 0; c < m; ++c) {
      if (!alive[c]) continue;
      if (victim == -1 || tally[c] < tally[victim] ||
          (tally[c] == tally[victim] && profile.lex_before(victim, c)))
        victim = c;
    }
    alive[victim] = 0;
    r.scores[victim] = Rat(tally[victim]);
    r.elimination_order.push_back(victim);
  }

  for (int c = 0; c < m; ++c) {
    if (alive[c]) {
      r.winner = c;
      r.scores[c] = Rat(profile.total_weight());
      break;
    }
  }
  return r;
}

ScoreVector scoring_vector_for(const Rule& rule, int m) {
  ScoreVector sv;
  sv.alphas.assign(m, Rat(0));
  auto check_k = [&](int k) {
    if (k < 1 || k > m) throw std::invalid_argument("k out of range for " + rule.name());
  };
  switch (rule.kind) {
    case RuleKind::Plurality:
      sv.alphas[0] = Rat(1);
      break;
    case RuleKind::Veto:
      for (int i = 0; i < m - 1; ++i) sv.alphas[i] = Rat(0);
      sv.alphas[m - 1] = Rat(-1);
      break;
    case RuleKind::KApproval:
      check_k(rule.k);
      for (int i = 0; i < rule.k; ++i) sv.alphas[i] = Rat(1);
      break;
    case RuleKind::KVeto:
      check_k(rule.k);
      for (int i = m - rule.k; i < m; ++i) sv.alphas[i] = Rat(-1);
      break;
    case RuleKind::Borda:
      for (int i = 0; i < m; ++i) sv.alphas[i] = Rat(m - 1 - i);
      break;
    case RuleKind::Scoring:
      if (static_cast<int>(rule.score_vector.alphas.size()) != m)
        throw std::invalid_argument("score vector length does not match candidate count");
      rule.score_vector.validate();
      return rule.score_vector;
    default:
      throw std::invalid_argument(rule.name() + " is not a scoring rule");
  }
  if (m == 1) sv.alphas[0] = Rat(1);  // degenerate; keeps alpha_1 > alpha_m vacuous
  return sv;
}

ElectionResult evaluate_rule(const Profile& profile, const Rule& rule) {
  switch (rule.kind) {
    case RuleKind::Maximin: {
      ElectionResult r;
      r.scores = maximin_scores(pairwise_margins(profile));
      r.winner = pick_winner(profile, r.scores);
      return r;
    }
    case RuleKind::Copeland: {
      if (rule.copeland_alpha < Rat(0) || rule.copeland_alpha > Rat(1))
        throw std::invalid_argument("copeland alpha must lie in [0,1]");
      ElectionResult r;
      r.scores = copeland_scores(pairwise_margins(profile), rule.copeland_alpha);
      r.winner = pick_winner(profile, r.scores);
      return r;
    }
    case RuleKind::Bucklin:
      return bucklin_result(profile);
    case RuleKind::Runoff:
      return runoff_result(profile);
    case RuleKind::Stv:
      return stv_trace(profile);
    default: {
      ElectionResult r;
      r.scores = positional_scores(profile, scoring_vector_for(rule, profile.num_candidates()));
      r.winner = pick_winner(profile, r.scores);
      return r;
    }
  }
}

std::vector<int> winner_set(const Profile& profile, const Rule& rule) {
  const int m = profile.num_candidates();
  std::vector<Rat> scores;
  switch (rule.kind) {
    case RuleKind::Maximin:
      scores = maximin_scores(pairwise_margins(profile));
      break;
    case RuleKind::Copeland:
      scores = copeland_scores(pairwise_margins(profile), rule.copeland_alpha);
      break;
    case RuleKind::Bucklin: {
      BucklinDepthTable t = bucklin_depths(profile);
      int depth = t.winning_depth();
      std::vector<int> winners;
      for (int c = 0; c < m; ++c)
        if (2 * t.count(c, depth) > t.n) winners.push_back(c);
      if (winners.empty())  // n == 0
        for (int c = 0; c < m; ++c) winners.push_back(c);
      return winners;
    }
    case RuleKind::Runoff:
    case RuleKind::Stv:
      throw std::invalid_argument("winner_set is undefined for " + rule.name());
    default:
      scores = positional_scores(profile, scoring_vector_for(rule, m));
      break;
  }
  std::vector<int> winners;
  Rat best = scores[0];
  for (int c = 1; c < m; ++c)
    if (scores[c] > best) best = scores[c];
  for (int c = 0; c < m; ++c)
    if (scores[c] == best) winners.push_back(c);
  return winners;
}

}  // namespace voteflow
