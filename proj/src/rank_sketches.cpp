#include "voteflow/rank_sketches.hpp"

#include <cmath>
#include <stdexcept>

#include "voteflow/hashing.hpp"

namespace voteflow {

namespace {

int sample_exponent_for(double budget, std::uint64_t stream_len) {
  double p = 6.0 * budget / static_cast<double>(stream_len);
  return p >= 1.0 ? 0 : floor_prob_exponent(p);
}

void validate_ranking(const std::vector<int>& ranking, int n, std::vector<char>& seen) {
  if (static_cast<int>(ranking.size()) != n)
    throw std::invalid_argument("ranking has inconsistent candidate count");
  std::fill(seen.begin(), seen.end(), 0);
  for (int c : ranking) {
    if (c < 0 || c >= n || seen[c]) throw std::invalid_argument("ranking is not a permutation");
    seen[c] = 1;
  }
}

}  // namespace

BordaSketch::BordaSketch(int num_candidates, std::uint64_t stream_len, double epsilon,
                         double delta, std::uint64_t seed, double budget_scale)
    : num_candidates_(num_candidates), stream_len_(stream_len), epsilon_(epsilon), rng_(seed) {
  if (num_candidates < 1) throw std::invalid_argument("need at least one candidate");
  if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("epsilon and delta must be in (0,1)");
  if (stream_len == 0) throw std::invalid_argument("stream length must be positive");
  const double budget =
      6.0 / (epsilon * epsilon) * std::log2(6.0 * num_candidates / delta) * budget_scale;
  sample_exponent_ = sample_exponent_for(budget, stream_len);
  beat_counts_.assign(num_candidates, 0);
}

void BordaSketch::insert(const std::vector<int>& ranking) {
  std::vector<char> seen(num_candidates_);
  validate_ranking(ranking, num_candidates_, seen);
  if (!low_space_select(sample_exponent_, rng_)) return;
  ++sampled_;
  for (int pos = 0; pos < num_candidates_; ++pos)
    beat_counts_[ranking[pos]] += num_candidates_ - 1 - pos;
}

std::vector<double> BordaSketch::report() const {
  if (sampled_ == 0) throw std::runtime_error("insufficient sample");
  const double scale = static_cast<double>(stream_len_) / static_cast<double>(sampled_);
  std::vector<double> out(num_candidates_);
  for (int c = 0; c < num_candidates_; ++c) out[c] = static_cast<double>(beat_counts_[c]) * scale;
  return out;
}

std::vector<int> BordaSketch::report_list(double phi) const {
  const double threshold = (phi - epsilon_ / 2.0) * static_cast<double>(stream_len_) *
                           static_cast<double>(num_candidates_);
  std::vector<double> est = report();
  std::vector<int> out;
  for (int c = 0; c < num_candidates_; ++c)
    if (est[c] >= threshold) out.push_back(c);
  return out;
}

MaximinSketch::MaximinSketch(int num_candidates, std::uint64_t stream_len, double epsilon,
                             double delta, std::uint64_t seed, double budget_scale)
    : num_candidates_(num_candidates), stream_len_(stream_len), epsilon_(epsilon), rng_(seed) {
  if (num_candidates < 2) throw std::invalid_argument("need at least two candidates");
  if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("epsilon and delta must be in (0,1)");
  if (stream_len == 0) throw std::invalid_argument("stream length must be positive");
  const double budget =
      8.0 / (epsilon * epsilon) * std::log(6.0 * num_candidates / delta) * budget_scale;
  sample_exponent_ = sample_exponent_for(budget, stream_len);
  wins_.assign(static_cast<std::size_t>(num_candidates) * num_candidates, 0);
}

void MaximinSketch::insert(const std::vector<int>& ranking) {
  std::vector<char> seen(num_candidates_);
  validate_ranking(ranking, num_candidates_, seen);
  if (!low_space_select(sample_exponent_, rng_)) return;
  ++sampled_;
  for (int i = 0; i < num_candidates_; ++i)
    for (int j = i + 1; j < num_candidates_; ++j)
      ++wins_[static_cast<std::size_t>(ranking[i]) * num_candidates_ + ranking[j]];
}

double MaximinSketch::margin_estimate(int x, int y) const {
  if (sampled_ == 0) throw std::runtime_error("insufficient sample");
  const double scale = static_cast<double>(stream_len_) / static_cast<double>(sampled_);
  const long long xy = wins_[static_cast<std::size_t>(x) * num_candidates_ + y];
  const long long yx = wins_[static_cast<std::size_t>(y) * num_candidates_ + x];
  return static_cast<double>(xy - yx) * scale;
}

std::vector<double> MaximinSketch::report() const {
  if (sampled_ == 0) throw std::runtime_error("insufficient sample");
  std::vector<double> out(num_candidates_);
  for (int x = 0; x < num_candidates_; ++x) {
    double worst = 0;
    bool first = true;
    for (int y = 0; y < num_candidates_; ++y) {
      if (y == x) continue;
      double v = margin_estimate(x, y);
      if (first || v < worst) worst = v;
      first = false;
    }
    out[x] = worst;
  }
  return out;
}

std::vector<int> MaximinSketch::report_list(double phi) const {
  const double threshold = (phi - epsilon_ / 2.0) * static_cast<double>(stream_len_);
  std::vector<double> est = report();
  std::vector<int> out;
  for (int c = 0; c < num_candidates_; ++c)
    if (est[c] >= threshold) out.push_back(c);
  return out;
}

}  // namespace voteflow
