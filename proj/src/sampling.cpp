#include "voteflow/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace voteflow {

namespace {

void check_params(double epsilon, double delta) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must be in (0,1)");
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0,1)");
}

long long to_count(double x) {
  if (!(x > 0) || x > 9.0e18) throw std::overflow_error("sample size out of range");
  return static_cast<long long>(std::ceil(x));
}

}  // namespace

VoteSource::VoteSource(const Profile& profile) : profile_(&profile) {
  if (profile.total_weight() == 0) throw std::invalid_argument("vote source needs a nonempty profile");
  cumulative_.reserve(profile.votes().size());
  long long acc = 0;
  for (const Vote& v : profile.votes()) {
    acc += v.weight;
    cumulative_.push_back(acc);
  }
}

const std::vector<int>& VoteSource::draw(Rng& rng) const {
  long long target = static_cast<long long>(rng.below(static_cast<std::uint64_t>(num_votes())));
  auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), target);
  return profile_->votes()[static_cast<std::size_t>(it - cumulative_.begin())].ranking;
}

long long winner_sample_size(const Rule& rule, double epsilon, double delta, int m) {
  check_params(epsilon, delta);
  if (m < 1) throw std::invalid_argument("m must be positive");
  const double e2 = epsilon * epsilon;
  switch (rule.kind) {
    case RuleKind::Plurality:
      return to_count(4.5 / e2 * std::log(2.0 / delta));
    case RuleKind::Veto:
      return to_count(4.5 / e2 * std::log(2.0 / delta));
    case RuleKind::KApproval:
    case RuleKind::KVeto:
      if (rule.k < 1 || rule.k > m) throw std::invalid_argument("k out of range");
      return to_count(4.5 / e2 * std::log(2.0 * rule.k / delta));
    case RuleKind::Scoring:
    case RuleKind::Borda:
    case RuleKind::Maximin:
    case RuleKind::Bucklin:
      return to_count(4.5 / e2 * std::log(2.0 * m / delta));
    case RuleKind::Copeland: {
      double l = std::log(2.0 * m / delta);
      return to_count(12.5 / e2 * l * l * l);
    }
    case RuleKind::Runoff:
      return to_count(27.0 / e2 * std::log(4.0 / delta));
    case RuleKind::Stv:
      return to_count(3.0 * m * m / e2 * (m * std::log(2.0) + std::log(2.0 * m / delta)));
  }
  throw std::invalid_argument("unsupported rule");
}

long long homogeneous_winner_sample_size(double epsilon, double delta, int m) {
  check_params(epsilon, delta);
  double fact = 1;
  for (int i = 2; i <= m; ++i) fact *= i;
  return to_count(4.5 * fact * fact / (epsilon * epsilon) * std::log(2.0 * fact / delta));
}

long long mov_sample_size(const Rule& rule, double epsilon, double delta, int m) {
  check_params(epsilon, delta);
  if (m < 1) throw std::invalid_argument("m must be positive");
  const double e2 = epsilon * epsilon;
  switch (rule.kind) {
    case RuleKind::Plurality:
      return to_count(12.0 / e2 * std::log(2.0 / delta));
    case RuleKind::KApproval:
      if (rule.k < 1 || rule.k > m) throw std::invalid_argument("k out of range");
      return to_count(12.0 / e2 * std::log(2.0 * rule.k / delta));
    case RuleKind::Veto:
    case RuleKind::KVeto:
    case RuleKind::Scoring:
    case RuleKind::Borda:
    case RuleKind::Bucklin:
      return to_count(12.0 / e2 * std::log(2.0 * m / delta));
    case RuleKind::Maximin:
      return to_count(24.0 / e2 * std::log(2.0 * m / delta));
    case RuleKind::Copeland:
      return to_count(96.0 / e2 * std::log(2.0 * m / delta));
    case RuleKind::Runoff:
    case RuleKind::Stv:
      throw std::invalid_argument("no margin-of-victory estimator for " + rule.name());
  }
  throw std::invalid_argument("unsupported rule");
}

namespace {

Profile sample_profile(const VoteSource& source, long long count, Rng& rng) {
  std::vector<Vote> votes;
  votes.reserve(static_cast<std::size_t>(count));
  for (long long i = 0; i < count; ++i) votes.push_back({source.draw(rng), 1});
  return Profile(source.profile().candidates(), std::move(votes));
}

// Top two candidates by score under the lexicographic tie-break.
std::pair<int, int> top_two(const Profile& profile, const std::vector<double>& scores) {
  int w = 0;
  for (int c = 1; c < profile.num_candidates(); ++c)
    if (scores[c] > scores[w] || (scores[c] == scores[w] && profile.lex_before(c, w))) w = c;
  int z = -1;
  for (int c = 0; c < profile.num_candidates(); ++c) {
    if (c == w) continue;
    if (z == -1 || scores[c] > scores[z] || (scores[c] == scores[z] && profile.lex_before(c, z)))
      z = c;
  }
  return {w, z};
}

}  // namespace

int predict_winner(const VoteSource& source, const Rule& rule, const PredictionParams& params) {
  const long long ell = winner_sample_size(rule, params.epsilon, params.delta,
                                           source.num_candidates());
  Rng rng(params.rng_seed);
  return evaluate_rule(sample_profile(source, ell, rng), rule).winner;
}

MovEstimate estimate_mov(const VoteSource& source, const Rule& rule,
                         const PredictionParams& params) {
  const int m = source.num_candidates();
  const long long n = source.num_votes();
  const long long ell = mov_sample_size(rule, params.epsilon, params.delta, m);
  if (m < 2) throw std::invalid_argument("margin estimation needs at least two candidates");

  Rng rng(params.rng_seed);
  Profile sample = sample_profile(source, ell, rng);
  const double scale = static_cast<double>(n) / static_cast<double>(ell);

  MovEstimate est;
  est.sample_size = ell;
  est.additive_slack = params.epsilon * static_cast<double>(n);

  switch (rule.kind) {
    case RuleKind::Plurality:
    case RuleKind::KApproval: {
      ScoreVector sv = scoring_vector_for(rule, m);
      std::vector<Rat> raw = evaluate_rule(sample, rule).scores;
      std::vector<double> s(m);
      for (int c = 0; c < m; ++c) s[c] = to_double(raw[c]) * scale;
      auto [w, z] = top_two(sample, s);
      est.m_bar = (s[w] - s[z]) / 2.0;
      est.c_factor = 0.0;
      break;
    }
    case RuleKind::Veto:
    case RuleKind::KVeto:
    case RuleKind::Scoring:
    case RuleKind::Borda: {
      ScoreVector sv = scoring_vector_for(rule, m).normalized();
      const double a1 = to_double(sv.alphas.front());
      std::vector<double> s(m, 0.0);
      for (const Vote& v : sample.votes())
        for (int i = 0; i < m; ++i) s[v.ranking[i]] += to_double(sv.alphas[i]);
      for (int c = 0; c < m; ++c) s[c] *= scale;
      auto [w, z] = top_two(sample, s);
      est.m_bar = (s[w] - s[z]) / (1.5 * a1);
      est.c_factor = 1.0 / 3.0;
      break;
    }
    case RuleKind::Bucklin: {
      BucklinDepthTable t = bucklin_depths(sample);
      // Estimated depth counts in full-election units.
      std::vector<std::vector<double>> est_counts(m, std::vector<double>(m));
      for (int c = 0; c < m; ++c)
        for (int depth = 1; depth <= m; ++depth)
          est_counts[c][depth - 1] = static_cast<double>(t.count(c, depth)) * scale;

      const double half = static_cast<double>(n) / 2.0;
      int w = evaluate_rule(sample, Rule::bucklin()).winner;
      bool found = false;
      double delta_bar = 0;
      for (int depth = 1; depth <= m - 1; ++depth) {
        if (!(est_counts[w][depth - 1] > half)) continue;
        for (int x = 0; x < m; ++x) {
          if (x == w || est_counts[x][depth - 1] > half) continue;
          double cand = est_counts[w][depth - 1] - est_counts[x][depth - 1] + 1;
          if (!found || cand < delta_bar) delta_bar = cand;
          found = true;
        }
      }
      if (!found) throw std::domain_error("no qualifying (depth, challenger) pair in sample");
      est.m_bar = delta_bar / 1.5;
      est.c_factor = 1.0 / 3.0;
      break;
    }
    case RuleKind::Maximin: {
      MarginMatrix d = pairwise_margins(sample);
      std::vector<double> s(m);
      for (int x = 0; x < m; ++x) {
        double worst = 0;
        bool first = true;
        for (int y = 0; y < m; ++y) {
          if (y == x) continue;
          double v = static_cast<double>(d(x, y)) * scale;
          if (first || v < worst) worst = v;
          first = false;
        }
        s[x] = worst;
      }
      auto [w, z] = top_two(sample, s);
      est.m_bar = (s[w] - s[z]) / 3.0;
      est.c_factor = 1.0 / 3.0;
      break;
    }
    case RuleKind::Copeland: {
      // Scaled margin estimates drive the relative-margin machinery.
      MarginMatrix d = pairwise_margins(sample);
      std::vector<double> dbar(static_cast<std::size_t>(m) * m);
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < m; ++y)
          dbar[static_cast<std::size_t>(x) * m + y] = static_cast<double>(d(x, y)) * scale;

      const double alpha = to_double(rule.copeland_alpha);
      auto shifted = [&](int x, long long t) {
        double s = 0;
        for (int y = 0; y < m; ++y) {
          if (y == x) continue;
          double v = dbar[static_cast<std::size_t>(y) * m + x];
          if (v < 2.0 * t)
            s += 1.0;
          else if (v == 2.0 * t)
            s += alpha;
        }
        return s;
      };
      const long long bound = n / 2 + 1;
      auto rm = [&](int x, int y) {
        for (long long t = -bound; t <= bound; ++t)
          if (shifted(x, -t) <= shifted(y, t)) return t;
        return bound;
      };

      int w = evaluate_rule(sample, rule).winner;
      long long gamma_bar = 0;
      bool first = true;
      for (int x = 0; x < m; ++x) {
        if (x == w) continue;
        long long v = rm(w, x);
        if (first || v < gamma_bar) gamma_bar = v;
        first = false;
      }
      const double lm = std::log(static_cast<double>(m));
      est.m_bar = 4.0 * (lm + 1.0) / (2.0 * lm + 3.0) * static_cast<double>(gamma_bar);
      est.c_factor = (2.0 * lm + 1.0) / (2.0 * lm + 3.0);
      break;
    }
    case RuleKind::Runoff:
    case RuleKind::Stv:
      throw std::invalid_argument("no margin-of-victory estimator for " + rule.name());
  }

  est.m_bar = std::max(est.m_bar, 0.0);
  return est;
}

}  // namespace voteflow
