#include "voteflow/sketches.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace voteflow {

namespace {

void check_stream_params(double epsilon, double phi) {
  if (!(epsilon > 0.0 && epsilon < phi && phi <= 1.0))
    throw std::invalid_argument("need 0 < epsilon < phi <= 1");
}

int rate_exponent_for(double budget, std::uint64_t stream_len) {
  double p = 6.0 * budget / static_cast<double>(stream_len);
  if (p >= 1.0) return 0;
  return floor_prob_exponent(p);
}

}  // namespace

// ---------------------------------------------------------------------------
// SimpleHHSketch

SimpleHHSketch::SimpleHHSketch(std::uint64_t universe, std::uint64_t stream_len, double epsilon,
                               double phi, double delta, std::uint64_t seed, double budget_scale)
    : stream_len_(stream_len),
      epsilon_(epsilon),
      phi_(phi),
      t1_(static_cast<std::size_t>(std::ceil(1.0 / epsilon))),
      rng_(seed) {
  check_stream_params(epsilon, phi);
  if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("delta must be in (0,1)");
  if (stream_len == 0) throw std::invalid_argument("stream length must be positive");

  const double budget = 6.0 * std::log2(6.0 / delta) / (epsilon * epsilon) * budget_scale;
  sample_exponent_ = rate_exponent_for(budget, stream_len);
  sample_rate_ = std::ldexp(1.0, -sample_exponent_);
  track_capacity_ = static_cast<std::size_t>(std::ceil(1.0 / phi));
  hash_ = draw_universal_hash(
      universe, static_cast<std::uint64_t>(std::ceil(4.0 * budget * budget / delta)), rng_);
}

void SimpleHHSketch::insert(std::uint64_t item) {
  if (!low_space_select(sample_exponent_, rng_)) return;
  ++sampled_;
  const std::uint64_t key = hash_(item);
  t1_.insert(key);
  refresh_tracking(item, key);
}

void SimpleHHSketch::refresh_tracking(std::uint64_t item, std::uint64_t key) {
  auto top = t1_.top(track_capacity_);
  bool key_on_top = false;
  for (const auto& [k, c] : top)
    if (k == key) key_on_top = true;
  if (key_on_top) ids_[key] = item;

  // Drop ids whose key fell out of the tracked range (or out of the table).
  for (auto it = ids_.begin(); it != ids_.end();) {
    bool still_top = false;
    for (const auto& [k, c] : top)
      if (k == it->first) still_top = true;
    it = still_top ? std::next(it) : ids_.erase(it);
  }
}

double SimpleHHSketch::scale() const {
  return static_cast<double>(stream_len_) / static_cast<double>(sampled_);
}

std::vector<HHItem> SimpleHHSketch::tracked() const {
  if (sampled_ == 0) throw std::runtime_error("insufficient sample");
  std::vector<HHItem> out;
  for (const auto& [key, count] : t1_.top(track_capacity_)) {
    auto it = ids_.find(key);
    if (it == ids_.end()) continue;
    double est = (static_cast<double>(count) + static_cast<double>(t1_.decrements()) / 2.0) * scale();
    out.push_back({it->second, est});
  }
  return out;
}

std::vector<HHItem> SimpleHHSketch::report() const {
  const double threshold =
      (phi_ - epsilon_ / 2.0) * static_cast<double>(sampled_) * scale();
  std::vector<HHItem> out;
  for (const HHItem& it : tracked())
    if (it.estimate >= threshold) out.push_back(it);
  return out;
}

// ---------------------------------------------------------------------------
// EpsMaximumSketch

EpsMaximumSketch::EpsMaximumSketch(std::uint64_t universe, std::uint64_t stream_len,
                                   double epsilon, double delta, std::uint64_t seed,
                                   double budget_scale)
    : inner_(universe, stream_len, epsilon, 1.0, delta, seed, budget_scale) {}

std::uint64_t EpsMaximumSketch::report() const {
  auto top = inner_.tracked();
  if (top.empty()) throw std::runtime_error("insufficient sample");
  return top.front().item;
}

double EpsMaximumSketch::report_estimate() const { return inner_.tracked().front().estimate; }

// ---------------------------------------------------------------------------
// OptimalHHSketch

OptimalHHSketch::OptimalHHSketch(std::uint64_t universe, std::uint64_t stream_len, double epsilon,
                                 double phi, std::uint64_t seed, OptimalHHConfig config)
    : stream_len_(stream_len),
      epsilon_(epsilon),
      phi_(phi),
      t1_(static_cast<std::size_t>(std::ceil(2.0 / phi))),
      rng_(seed) {
  check_stream_params(epsilon, phi);
  if (stream_len == 0) throw std::invalid_argument("stream length must be positive");

  const double budget = config.sample_budget_factor / (epsilon * epsilon);
  double p = budget / static_cast<double>(stream_len);
  sample_exponent_ = p >= 1.0 ? 0 : floor_prob_exponent(p);
  rate_exponent_ = floor_prob_exponent(epsilon);
  repetitions_ = static_cast<int>(std::ceil(config.repetition_factor * std::log2(12.0 / phi)));
  rows_ = static_cast<std::size_t>(std::ceil(config.row_factor / epsilon));
  max_epoch_ = static_cast<int>(std::ceil(4.0 * std::log2(1.0 / epsilon)));
  epoch_scale_ = config.epoch_scale;

  hashes_.reserve(repetitions_);
  for (int j = 0; j < repetitions_; ++j)
    hashes_.push_back(draw_universal_hash(universe, rows_, rng_));
  t2_.assign(rows_ * static_cast<std::size_t>(repetitions_), 0);
}

void OptimalHHSketch::insert(std::uint64_t item) {
  if (!low_space_select(sample_exponent_, rng_)) return;
  ++sampled_;
  t1_.insert(item);
  max_t1_size_ = std::max(max_t1_size_, t1_.size());

  for (int j = 0; j < repetitions_; ++j) {
    const std::size_t row = hashes_[j](item) - 1;
    std::uint64_t& cell = t2_[row * repetitions_ + j];
    if (low_space_select(rate_exponent_, rng_)) ++cell;
    const double v = epoch_scale_ * static_cast<double>(cell) * static_cast<double>(cell);
    if (v < 1.0) continue;  // epoch still negative
    const int t = std::min(static_cast<int>(std::floor(std::log2(v))), max_epoch_);
    const int increment_exponent = std::max(rate_exponent_ - t, 0);
    if (low_space_select(increment_exponent, rng_)) {
      const std::uint64_t key =
          (static_cast<std::uint64_t>(row) * repetitions_ + j) * 64 + static_cast<std::uint64_t>(t);
      ++t3_[key];
    }
  }
}

double OptimalHHSketch::estimate_for(std::uint64_t item) const {
  std::vector<double> per_rep(repetitions_);
  for (int j = 0; j < repetitions_; ++j) {
    const std::size_t row = hashes_[j](item) - 1;
    double sum = 0;
    for (int t = 0; t <= max_epoch_; ++t) {
      const std::uint64_t key =
          (static_cast<std::uint64_t>(row) * repetitions_ + j) * 64 + static_cast<std::uint64_t>(t);
      auto it = t3_.find(key);
      if (it == t3_.end()) continue;
      const double rate = std::min(std::ldexp(1.0, t - rate_exponent_), 1.0);
      sum += static_cast<double>(it->second) / rate;
    }
    per_rep[j] = sum;
  }
  std::nth_element(per_rep.begin(), per_rep.begin() + repetitions_ / 2, per_rep.end());
  return per_rep[repetitions_ / 2];
}

std::vector<HHItem> OptimalHHSketch::report() const {
  if (sampled_ == 0) throw std::runtime_error("insufficient sample");
  const double threshold = (phi_ - epsilon_ / 2.0) * static_cast<double>(sampled_);
  const double scale = static_cast<double>(stream_len_) / static_cast<double>(sampled_);
  std::vector<HHItem> out;
  for (const auto& [item, count] : t1_.top(t1_.size())) {
    const double est = estimate_for(item);
    if (est >= threshold) out.push_back({item, est * scale});
  }
  std::sort(out.begin(), out.end(), [](const HHItem& a, const HHItem& b) {
    return a.estimate != b.estimate ? a.estimate > b.estimate : a.item < b.item;
  });
  return out;
}

long long OptimalHHSketch::subsample_cell_total() const {
  long long total = 0;
  for (std::uint64_t c : t2_) total += static_cast<long long>(c);
  return total;
}

// ---------------------------------------------------------------------------
// MinimumSketch

MinimumSketch::MinimumSketch(std::vector<std::uint64_t> universe, std::uint64_t stream_len,
                             double epsilon, double delta, std::uint64_t seed, double budget_scale)
    : universe_(std::move(universe)), rng_(seed) {
  if (universe_.empty()) throw std::invalid_argument("universe must be nonempty");
  if (!(epsilon > 0.0 && epsilon < 1.0) || !(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("epsilon and delta must be in (0,1)");
  if (stream_len == 0) throw std::invalid_argument("stream length must be positive");
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (!index_.emplace(universe_[i], i).second)
      throw std::invalid_argument("duplicate item in universe");
  }

  const double shortcut_size = 1.0 / ((1.0 - delta) * epsilon);
  if (static_cast<double>(universe_.size()) >= shortcut_size) {
    const std::uint64_t prefix =
        std::min<std::uint64_t>(static_cast<std::uint64_t>(std::ceil(shortcut_size)),
                                universe_.size());
    shortcut_item_ = universe_[rng_.below(prefix)];
    return;
  }

  const double l1 = std::log2(6.0 / (epsilon * delta)) / epsilon * budget_scale;
  const double l2 = std::log2(6.0 / delta) / (epsilon * epsilon) * budget_scale;
  const double l3 = std::pow(std::log2(6.0 / (delta * epsilon)), 6.0) / epsilon * budget_scale;
  k1_ = rate_exponent_for(l1, stream_len);
  k2_ = rate_exponent_for(l2, stream_len);
  k3_ = rate_exponent_for(l3, stream_len);
  s2_distinct_limit_ = 1.0 / (epsilon * std::log2(1.0 / epsilon));
  s3_cap_ = static_cast<long long>(2.0 * std::pow(std::log2(2.0 / (epsilon * delta)), 7.0));

  s1_present_.assign(universe_.size(), 0);
  s2_counts_.assign(universe_.size(), -1);
  s3_counts_.assign(universe_.size(), -1);
  seen_.assign(universe_.size(), 0);
}

void MinimumSketch::insert(std::uint64_t item) {
  if (shortcut_item_ != kNoItem) return;
  auto it = index_.find(item);
  if (it == index_.end()) throw std::invalid_argument("item outside the declared universe");
  const std::size_t idx = it->second;

  if (!seen_[idx]) {
    seen_[idx] = 1;
    ++distinct_;
  }

  if (low_space_select(k1_, rng_)) s1_present_[idx] = 1;

  if (static_cast<double>(distinct_) <= s2_distinct_limit_ && low_space_select(k2_, rng_)) {
    if (s2_counts_[idx] < 0) s2_counts_[idx] = 0;
    ++s2_counts_[idx];
  }

  if (low_space_select(k3_, rng_)) {
    if (s3_counts_[idx] < 0) s3_counts_[idx] = 0;
    if (s3_counts_[idx] < s3_cap_) ++s3_counts_[idx];  // counters truncate at the cap
  }
}

bool MinimumSketch::exact_map_active() const {
  return shortcut_item_ == kNoItem && static_cast<double>(distinct_) <= s2_distinct_limit_;
}

std::uint64_t MinimumSketch::report() const {
  if (shortcut_item_ != kNoItem) return shortcut_item_;

  for (std::size_t i = 0; i < universe_.size(); ++i)
    if (!s1_present_[i]) return universe_[i];

  const std::vector<long long>& counts = exact_map_active() ? s2_counts_ : s3_counts_;
  long long best = -1;
  std::size_t best_idx = 0;
  for (std::size_t i = 0; i < universe_.size(); ++i) {
    if (counts[i] < 0) continue;
    if (best < 0 || counts[i] < best) {
      best = counts[i];
      best_idx = i;
    }
  }
  if (best < 0) throw std::runtime_error("insufficient sample");
  return universe_[best_idx];
}

}  // namespace voteflow
