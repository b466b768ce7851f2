#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace catwords {

// A word is a finite sequence of non-negative integers. The same carrier
// is used for Catalan words, ascent sequences and patterns.
using Word = std::vector<int>;

struct WordStats {
  int length = 0;
  int descents = 0;
  int ascents = 0;
};

// Catalan word: empty, or w[0] = 0 and 0 <= w[i] <= w[i-1]+1.
bool is_catalan(const Word& w);

// Valid start of some Catalan word (same growth rule, any length).
bool is_catalan_prefix(const Word& w);

// Ascent sequence: empty, or w[0] = 0 and 0 <= w[i] <= asc(w[0..i-1])+1.
bool is_ascent_sequence(const Word& w);

bool is_ascent_prefix(const Word& w);

WordStats stats(const Word& w);

inline int descent_count(const Word& w) { return stats(w).descents; }

// Exact Catalan number C(2n,n)/(n+1); throws overflow_error when it does
// not fit 64 bits.
std::uint64_t catalan_number(int n);

// Canonical text form is comma separated ("0,0,1,2"); the compact digit
// form ("0012") is accepted on input when every entry is a single digit.
// The empty string denotes the empty word.
std::string format_word(const Word& w);
Word parse_word(std::string_view text);  // throws std::invalid_argument

}  // namespace catwords
