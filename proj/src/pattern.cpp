#include "catwords/pattern.hpp"

#include <algorithm>
#include <stdexcept>

namespace catwords {

bool Pattern::is_valid(const Word& w) {
  if (w.empty()) return true;
  int mx = -1;
  for (int v : w) {
    if (v < 0) return false;
    mx = std::max(mx, v);
  }
  std::vector<char> seen(static_cast<std::size_t>(mx) + 1, 0);
  for (int v : w) seen[static_cast<std::size_t>(v)] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

Pattern::Pattern(Word entries) : entries_(std::move(entries)) {
  if (!is_valid(entries_))
    throw std::invalid_argument("invalid pattern: '" + format_word(entries_) + "'");
}

std::string Pattern::text() const {
  bool compact = std::all_of(entries_.begin(), entries_.end(), [](int v) { return v <= 9; });
  if (!compact) return format_word(entries_);
  std::string s;
  for (int v : entries_) s += static_cast<char>('0' + v);
  return s;
}

Pattern parse_pattern(std::string_view text) { return Pattern(parse_word(text)); }

std::vector<Pattern> valid_patterns(int length) {
  std::vector<Pattern> out;
  if (length == 0) {
    out.emplace_back(Word{});
    return out;
  }
  Word w(static_cast<std::size_t>(length), 0);
  // lexicographic successor over words with entries < length
  auto next = [&]() {
    for (int i = length - 1; i >= 0; --i) {
      if (w[i] < length - 1) {
        ++w[i];
        for (int j = i + 1; j < length; ++j) w[j] = 0;
        return true;
      }
      w[i] = 0;
    }
    return false;
  };
  do {
    if (Pattern::is_valid(w)) out.emplace_back(w);
  } while (next());
  return out;
}

namespace {

inline int sgn(int a, int b) { return (a > b) - (a < b); }

// Backtracking subsequence search. Patterns here have length <= 4, so the
// worst case is tiny; candidates are pruned against all chosen positions.
bool contains_impl(const Word& w, const Word& p) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(p.size());
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> pos(static_cast<std::size_t>(k), 0);
  int j = 0;
  int start = 0;
  while (true) {
    bool advanced = false;
    for (int i = start; i <= n - (k - j); ++i) {
      bool ok = true;
      for (int a = 0; a < j; ++a) {
        if (sgn(w[pos[a]], w[i]) != sgn(p[a], p[j])) {
          ok = false;
          break;
        }
      }
      if (ok) {
        pos[j] = i;
        ++j;
        if (j == k) return true;
        start = i + 1;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      if (j == 0) return false;
      --j;
      start = pos[j] + 1;
    }
  }
}

}  // namespace

bool contains(const Word& w, const Pattern& p) { return contains_impl(w, p.entries()); }

bool pattern_contains(const Pattern& tau, const Pattern& sigma) {
  return contains_impl(tau.entries(), sigma.entries());
}

PatternSet::PatternSet(std::vector<Pattern> patterns) : patterns_(std::move(patterns)) {
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

PatternSet PatternSet::minimized() const {
  std::vector<Pattern> kept;
  for (const Pattern& cand : patterns_) {
    bool redundant = false;
    for (const Pattern& other : patterns_) {
      if (other == cand) continue;
      // distinct patterns cannot contain each other mutually, so this
      // drops exactly the containers
      if (pattern_contains(cand, other)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(cand);
  }
  return PatternSet(std::move(kept));
}

bool avoids(const Word& w, const PatternSet& ps) {
  for (const Pattern& p : ps.patterns()) {
    if (contains(w, p)) return false;
  }
  return true;
}

PatternSet parse_pattern_set(std::string_view text) {
  std::vector<Pattern> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find('+', pos);
    std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (tok.empty()) throw std::invalid_argument("empty pattern in '" + std::string(text) + "'");
    parts.push_back(parse_pattern(tok));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (parts.empty()) throw std::invalid_argument("empty pattern list");
  return PatternSet(std::move(parts));
}

}  // namespace catwords
