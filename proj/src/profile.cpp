#include "voteflow/profile.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace voteflow {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  for (char ch : id) {
    unsigned char c = static_cast<unsigned char>(ch);
    if (c >= 128 || std::isspace(c)) return false;
    if (ch == ',' || ch == '>' || ch == ':' || ch == '#') return false;
  }
  return true;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

Profile::Profile(std::vector<std::string> candidates, std::vector<Vote> votes)
    : candidates_(std::move(candidates)), votes_(std::move(votes)) {
  const int m = num_candidates();
  if (m < 1) throw std::invalid_argument("profile needs at least one candidate");
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (candidates_[i] == candidates_[j])
        throw std::invalid_argument("duplicate candidate identifier: " + candidates_[i]);
    }
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return candidates_[a] < candidates_[b]; });
  lex_rank_.assign(m, 0);
  for (int r = 0; r < m; ++r) lex_rank_[order[r]] = r;

  std::vector<char> seen(m);
  for (const Vote& v : votes_) {
    if (v.weight < 1) throw std::invalid_argument("vote weight must be positive");
    if (static_cast<int>(v.ranking.size()) != m)
      throw std::invalid_argument("ranking is not a complete permutation");
    std::fill(seen.begin(), seen.end(), 0);
    for (int c : v.ranking) {
      if (c < 0 || c >= m || seen[c]) throw std::invalid_argument("ranking is not a permutation");
      seen[c] = 1;
    }
    total_weight_ += v.weight;
    if (v.weight != 1) unit_weights_ = false;
  }
}

int Profile::candidate_index(std::string_view name) const {
  for (int i = 0; i < num_candidates(); ++i)
    if (candidates_[i] == name) return i;
  return -1;
}

Profile parse_profile(std::string_view text) {
  std::vector<std::string> candidates;
  std::unordered_map<std::string, int> index;
  std::vector<Vote> votes;
  bool header_seen = false;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                           : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!header_seen) {
      constexpr std::string_view kPrefix = "candidates:";
      if (line.substr(0, kPrefix.size()) != kPrefix)
        throw VoteFileError(line_no, "expected 'candidates:' header");
      for (std::string_view tok : split(line.substr(kPrefix.size()), ',')) {
        tok = trim(tok);
        if (!valid_identifier(tok))
          throw VoteFileError(line_no, "invalid candidate identifier '" + std::string(tok) + "'");
        if (index.count(std::string(tok)))
          throw VoteFileError(line_no, "duplicate candidate '" + std::string(tok) + "'");
        index.emplace(std::string(tok), static_cast<int>(candidates.size()));
        candidates.emplace_back(tok);
      }
      if (candidates.empty()) throw VoteFileError(line_no, "empty candidate list");
      header_seen = true;
      continue;
    }

    long long weight = 1;
    if (std::size_t colon = line.find(':'); colon != std::string_view::npos) {
      std::string_view w = trim(line.substr(0, colon));
      if (w.empty() || !std::all_of(w.begin(), w.end(), [](char c) {
            return std::isdigit(static_cast<unsigned char>(c));
          }))
        throw VoteFileError(line_no, "malformed weight '" + std::string(w) + "'");
      weight = std::stoll(std::string(w));
      if (weight < 1) throw VoteFileError(line_no, "weight must be positive");
      line = trim(line.substr(colon + 1));
    }

    Vote vote;
    vote.weight = weight;
    std::vector<char> seen(candidates.size(), 0);
    for (std::string_view tok : split(line, '>')) {
      tok = trim(tok);
      auto it = index.find(std::string(tok));
      if (it == index.end())
        throw VoteFileError(line_no, "unknown candidate '" + std::string(tok) + "'");
      if (seen[it->second])
        throw VoteFileError(line_no, "duplicate candidate '" + std::string(tok) + "' in ranking");
      seen[it->second] = 1;
      vote.ranking.push_back(it->second);
    }
    if (vote.ranking.size() != candidates.size())
      throw VoteFileError(line_no, "ranking does not cover all candidates");
    votes.push_back(std::move(vote));
  }

  if (!header_seen) throw VoteFileError(1, "missing 'candidates:' header");
  return Profile(std::move(candidates), std::move(votes));
}

std::string emit_profile(const Profile& profile) {
  std::ostringstream out;
  out << "candidates: ";
  for (int i = 0; i < profile.num_candidates(); ++i) {
    if (i) out << ',';
    out << profile.candidate_name(i);
  }
  out << '\n';
  for (const Vote& v : profile.votes()) {
    if (v.weight != 1) out << v.weight << ": ";
    for (std::size_t i = 0; i < v.ranking.size(); ++i) {
      if (i) out << '>';
      out << profile.candidate_name(v.ranking[i]);
    }
    out << '\n';
  }
  return out.str();
}

Profile load_profile_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open vote file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile(buf.str());
}

}  // namespace voteflow
