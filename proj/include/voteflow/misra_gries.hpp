#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace voteflow {

// Deterministic frequent-items table. With capacity k and s insertions, a
// stored count c for key x satisfies f(x) - decrements() <= c <= f(x), and
// decrements() <= s / (k + 1).
class MisraGries {
 public:
  explicit MisraGries(std::size_t capacity) : capacity_(capacity) {}

  void insert(std::uint64_t key) {
    auto it = counts_.find(key);
    if (it != counts_.end()) {
      ++it->second;
      return;
    }
    if (counts_.size() < capacity_) {
      counts_.emplace(key, 1);
      return;
    }
    ++decrements_;
    for (auto iter = counts_.begin(); iter != counts_.end();) {
      if (--iter->second == 0)
        iter = counts_.erase(iter);
      else
        ++iter;
    }
  }

  long long count(std::uint64_t key) const {
    auto it = counts_.find(key);
    return it == counts_.end() ? 0 : it->second;
  }

  // Entries sorted by (count desc, key asc); at most `limit` of them.
  std::vector<std::pair<std::uint64_t, long long>> top(std::size_t limit) const {
    std::vector<std::pair<std::uint64_t, long long>> out(counts_.begin(), counts_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    if (out.size() > limit) out.resize(limit);
    return out;
  }

  const std::unordered_map<std::uint64_t, long long>& entries() const { return counts_; }
  std::size_t size() const { return counts_.size(); }
  std::size_t capacity() const { return capacity_; }
  long long decrements() const { return decrements_; }

 private:
  std::size_t capacity_;
  long long decrements_ = 0;
  std::unordered_map<std::uint64_t, long long> counts_;
};

}  // namespace voteflow
