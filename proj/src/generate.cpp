#include "voteflow/generate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "voteflow/mov.hpp"

namespace voteflow {

ZipfGenerator::ZipfGenerator(std::uint64_t universe_size, double exponent, std::uint64_t seed)
    : rng_(seed) {
  if (universe_size < 1) throw std::invalid_argument("universe must be nonempty");
  cumulative_.resize(universe_size);
  double acc = 0;
  for (std::uint64_t r = 1; r <= universe_size; ++r) {
    acc += std::pow(static_cast<double>(r), -exponent);
    cumulative_[r - 1] = acc;
  }
  for (double& c : cumulative_) c /= acc;
}

std::uint64_t ZipfGenerator::next() {
  double u = rng_.next_unit();
  auto it = std::lower_bound(cumulative_.begin(), cumulative_.end(), u);
  if (it == cumulative_.end()) --it;
  return static_cast<std::uint64_t>(it - cumulative_.begin()) + 1;
}

std::vector<int> random_ranking(int num_candidates, Rng& rng) {
  std::vector<int> r(num_candidates);
  for (int i = 0; i < num_candidates; ++i) r[i] = i;
  for (int i = num_candidates - 1; i > 0; --i)
    std::swap(r[i], r[rng.below(static_cast<std::uint64_t>(i) + 1)]);
  return r;
}

PlantedRankingGenerator::PlantedRankingGenerator(int num_candidates, int planted,
                                                 double top_fraction, std::uint64_t seed)
    : num_candidates_(num_candidates),
      planted_(planted),
      top_fraction_(top_fraction),
      rng_(seed) {
  if (planted < 0 || planted >= num_candidates) throw std::invalid_argument("bad planted index");
}

std::vector<int> PlantedRankingGenerator::next() {
  std::vector<int> r = random_ranking(num_candidates_, rng_);
  if (rng_.bernoulli(top_fraction_)) {
    auto it = std::find(r.begin(), r.end(), planted_);
    std::swap(*r.begin(), *it);
  }
  return r;
}

namespace {

std::vector<std::string> default_names(int m) {
  std::vector<std::string> names;
  names.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::string name;
    int v = i;
    do {
      name.insert(name.begin(), static_cast<char>('a' + v % 26));
      v = v / 26 - 1;
    } while (v >= 0);
    names.push_back(name);
  }
  return names;
}

}  // namespace

McGarveyResult gen_mcgarvey(const std::vector<std::string>& candidates,
                            const std::vector<long long>& targets) {
  const int m = static_cast<int>(candidates.size());
  if (m < 1 || targets.size() != static_cast<std::size_t>(m) * m)
    throw std::invalid_argument("target table must be m x m");
  auto at = [&](const std::vector<long long>& t, int x, int y) -> long long {
    return t[static_cast<std::size_t>(x) * m + y];
  };
  for (int x = 0; x < m; ++x) {
    if (at(targets, x, x) != 0) throw std::invalid_argument("diagonal must be zero");
    for (int y = 0; y < m; ++y)
      if (at(targets, x, y) != -at(targets, y, x))
        throw std::invalid_argument("target table is not antisymmetric");
  }

  // All margins of one election share the parity of n, so mixed-parity tables
  // get the off-parity entries bumped one unit outward.
  std::vector<long long> adjusted = targets;
  bool padded = false;
  if (m >= 2) {
    bool has_odd = false, has_even = false;
    for (int x = 0; x < m; ++x)
      for (int y = x + 1; y < m; ++y)
        ((at(adjusted, x, y) % 2 + 2) % 2 == 1 ? has_odd : has_even) = true;
    if (has_odd && has_even) {
      padded = true;
      for (int x = 0; x < m; ++x) {
        for (int y = x + 1; y < m; ++y) {
          long long v = at(adjusted, x, y);
          if ((v % 2 + 2) % 2 == 0) continue;  // keep odd as majority? no: make all even
          long long bumped = v > 0 ? v + 1 : v - 1;
          if (v == 0) bumped = 0;  // unreachable (0 is even)
          adjusted[static_cast<std::size_t>(x) * m + y] = bumped;
          adjusted[static_cast<std::size_t>(y) * m + x] = -bumped;
        }
      }
    }
  }

  bool odd_parity = false;
  for (int x = 0; x < m && !odd_parity; ++x)
    for (int y = x + 1; y < m; ++y)
      if ((at(adjusted, x, y) % 2 + 2) % 2 == 1) {
        odd_parity = true;
        break;
      }

  std::vector<Vote> votes;
  std::vector<long long> needed = adjusted;
  if (odd_parity) {
    // A single seed vote makes every pairwise margin odd; remaining
    // adjustments are even.
    std::vector<int> seed(m);
    for (int i = 0; i < m; ++i) seed[i] = i;
    votes.push_back({seed, 1});
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        if (x == y) continue;
        needed[static_cast<std::size_t>(x) * m + y] -= (x < y ? 1 : -1);
      }
  }

  // Per unit of remaining margin: one vote x > y > rest and one vote
  // reverse(rest) > x > y. All pairs except (x, y) cancel.
  for (int x = 0; x < m; ++x) {
    for (int y = x + 1; y < m; ++y) {
      long long need = at(needed, x, y);
      int hi = need > 0 ? x : y;
      int lo = need > 0 ? y : x;
      long long pairs = std::llabs(need) / 2;
      if (std::llabs(need) % 2 != 0) throw std::logic_error("parity normalization failed");
      std::vector<int> rest;
      for (int c = 0; c < m; ++c)
        if (c != hi && c != lo) rest.push_back(c);
      std::vector<int> forward{hi, lo};
      forward.insert(forward.end(), rest.begin(), rest.end());
      std::vector<int> backward(rest.rbegin(), rest.rend());
      backward.push_back(hi);
      backward.push_back(lo);
      for (long long i = 0; i < pairs; ++i) {
        votes.push_back({forward, 1});
        votes.push_back({backward, 1});
      }
    }
  }

  if (votes.empty()) {
    // All-zero targets: two mutually reversed votes cancel exactly.
    std::vector<int> fwd(m), bwd(m);
    for (int i = 0; i < m; ++i) {
      fwd[i] = i;
      bwd[i] = m - 1 - i;
    }
    votes.push_back({fwd, 1});
    if (m >= 2) votes.push_back({bwd, 1});
  }

  McGarveyResult result{Profile(candidates, std::move(votes)), padded, adjusted};
  MarginMatrix check = pairwise_margins(result.profile);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (check(x, y) != at(adjusted, x, y)) throw std::logic_error("margin realization failed");
  return result;
}

std::pair<Profile, MarginCertificate> gen_margin_election(int m, long long n, const Rule& rule,
                                                          double fraction, std::uint64_t seed) {
  if (m < 2 || n < 2) throw std::invalid_argument("need m >= 2 and n >= 2");
  if (!(fraction > 0.0 && fraction < 0.5)) throw std::invalid_argument("fraction must be in (0, 0.5)");
  const long long target = static_cast<long long>(std::ceil(fraction * static_cast<double>(n)));
  Rng rng(seed);
  const std::vector<std::string> names = default_names(m);

  if (rule.kind == RuleKind::Plurality) {
    // Two leading blocks plus a thin tail; certified by the move-votes oracle.
    for (long long lead = 2 * target; lead <= n; lead += std::max<long long>(1, target / 4)) {
      long long tail = std::min<long long>(m - 2, n / 20);
      long long top = (n - tail + lead) / 2;
      long long second = n - tail - top;
      if (second < 0 || top > n) break;
      std::vector<Vote> votes;
      std::vector<int> base(m);
      for (int i = 0; i < m; ++i) base[i] = i;
      auto push_block = [&](int favorite, long long count) {
        for (long long i = 0; i < count; ++i) {
          std::vector<int> r = random_ranking(m, rng);
          std::swap(*r.begin(), *std::find(r.begin(), r.end(), favorite));
          votes.push_back({r, 1});
        }
      };
      push_block(0, top);
      push_block(1, second);
      for (long long i = 0; i < tail; ++i) push_block(2 + static_cast<int>(i % (m - 2)), 1);
      Profile profile(names, std::move(votes));
      long long mov = plurality_mov_oracle(profile);
      if (mov >= target) return {std::move(profile), {"plurality-oracle", mov}};
    }
    throw std::runtime_error("cannot certify requested margin at this scale");
  }

  if (rule.is_scoring_family()) {
    ScoreVector sv = scoring_vector_for(rule, m).normalized();
    const double a1 = to_double(sv.alphas.front());
    const bool strict_top = m >= 2 && sv.alphas[0] > sv.alphas[1];
    if (strict_top) {
      // Two opposed blocks, winner first vs. winner second; the gap bound
      // MOV >= min_gap / (2*alpha_1) certifies the margin exactly.
      std::vector<int> fwd(m), bwd(m);
      for (int i = 0; i < m; ++i) fwd[i] = i;
      bwd = fwd;
      std::swap(bwd[0], bwd[1]);
      for (double lead = 0.55; lead <= 0.995; lead += 0.02) {
        long long top = std::min<long long>(
            n, static_cast<long long>(std::ceil(lead * static_cast<double>(n))));
        long long rest = n - top;
        std::vector<Vote> votes;
        if (top > 0) votes.push_back({fwd, top});
        if (rest > 0) votes.push_back({bwd, rest});
        Profile profile(names, std::move(votes));

        std::vector<Rat> scores(m, Rat(0));
        for (const Vote& v : profile.votes())
          for (int i = 0; i < m; ++i) scores[v.ranking[i]] += Rat(v.weight) * sv.alphas[i];
        int w = evaluate_rule(profile, rule).winner;
        bool have_gap = false;
        Rat gap(0);
        for (int c = 0; c < m; ++c) {
          if (c == w) continue;
          Rat g = scores[w] - scores[c];
          if (!have_gap || g < gap) gap = g;
          have_gap = true;
        }
        const double bound = to_double(gap) / (2.0 * a1);
        if (bound >= static_cast<double>(target))
          return {std::move(profile), {"scoring-gap", static_cast<long long>(std::floor(bound))}};
      }
      throw std::runtime_error("cannot certify requested margin at this scale");
    }
  }

  // Small instances: random search certified by brute force.
  if (m <= 4 && n <= 10) {
    for (int attempt = 0; attempt < 512; ++attempt) {
      std::vector<Vote> votes;
      for (long long i = 0; i < n; ++i) votes.push_back({random_ranking(m, rng), 1});
      Profile profile(names, std::move(votes));
      long long mov = exact_mov(profile, rule);
      if (mov >= target) return {std::move(profile), {"exact", mov}};
    }
  }
  throw std::runtime_error("cannot certify requested margin at this scale");
}

}  // namespace voteflow
