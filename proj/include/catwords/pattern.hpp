#pragma once

#include <string_view>
#include <vector>

#include "catwords/word.hpp"

namespace catwords {

// A pattern is a word whose value set is an initial segment {0,..,m}.
//
// Containment semantics: p occurs in w when some subsequence of w is
// order-isomorphic to p, where the isomorphism preserves <, = and >
// between every pair of positions. Equalities in the pattern therefore
// force equalities in the word: 00 only matches a repeated value, and
// 0101 does not contain 101 via unequal entries.
class Pattern {
 public:
  Pattern() = default;             // the empty pattern
  explicit Pattern(Word entries);  // throws std::invalid_argument if invalid
  static bool is_valid(const Word& w);

  const Word& entries() const { return entries_; }
  int size() const { return static_cast<int>(entries_.size()); }
  std::string text() const;  // compact digits when possible

  bool operator==(const Pattern&) const = default;
  auto operator<=>(const Pattern&) const = default;

 private:
  Word entries_;
};

Pattern parse_pattern(std::string_view text);

// Every valid pattern of the given length, lexicographic. length 3 yields
// the 13 patterns 000,001,010,011,012,021,100,101,102,110,120,201,210.
std::vector<Pattern> valid_patterns(int length);

bool contains(const Word& w, const Pattern& p);

// Pattern-in-pattern containment, same semantics.
bool pattern_contains(const Pattern& tau, const Pattern& sigma);

// An unordered, deduplicated set of patterns to be avoided jointly.
class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Pattern> patterns);

  const std::vector<Pattern>& patterns() const { return patterns_; }
  bool empty() const { return patterns_.empty(); }
  std::size_t size() const { return patterns_.size(); }

  // Drops every member that pattern-contains another member; avoiding the
  // contained one already forces avoiding the container. Used by the
  // oracle's hot loops only; registry queries keep the literal set.
  PatternSet minimized() const;

  bool operator==(const PatternSet&) const = default;

 private:
  std::vector<Pattern> patterns_;  // sorted, unique
};

bool avoids(const Word& w, const PatternSet& ps);

// "sigma+tau" (or a single pattern); each part in word text form.
PatternSet parse_pattern_set(std::string_view text);

}  // namespace catwords
