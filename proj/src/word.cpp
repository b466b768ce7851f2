#include "catwords/word.hpp"

#include <cctype>
#include <stdexcept>

#include "catwords/checked_int.hpp"

namespace catwords {

bool is_catalan(const Word& w) {
  if (w.empty()) return true;
  if (w[0] != 0) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] > w[i - 1] + 1) return false;
  }
  return true;
}

bool is_catalan_prefix(const Word& w) { return is_catalan(w); }

bool is_ascent_sequence(const Word& w) {
  if (w.empty()) return true;
  if (w[0] != 0) return false;
  int asc = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] < 0 || w[i] > asc + 1) return false;
    if (w[i - 1] < w[i]) ++asc;
  }
  return true;
}

bool is_ascent_prefix(const Word& w) { return is_ascent_sequence(w); }

WordStats stats(const Word& w) {
  WordStats s;
  s.length = static_cast<int>(w.size());
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] > w[i + 1]) ++s.descents;
    else if (w[i] < w[i + 1]) ++s.ascents;
  }
  return s;
}

std::uint64_t catalan_number(int n) {
  if (n < 0) throw std::invalid_argument("catalan_number: negative n");
  std::uint64_t c = 1;
  for (int k = 0; k < n; ++k) {
    // c_{k+1} = c_k * 2(2k+1) / (k+2), exact at every step
    c = checked_mul(c, 2ull * (2ull * k + 1));
    c /= static_cast<std::uint64_t>(k + 2);
  }
  return c;
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  // trim
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  Word w;
  if (text.empty()) return w;
  if (text.find(',') == std::string_view::npos) {
    // compact digit form, one entry per character
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad word: '" + std::string(text) + "'");
      w.push_back(c - '0');
    }
    return w;
  }
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
    if (tok.empty()) throw std::invalid_argument("bad word: '" + std::string(text) + "'");
    int v = 0;
    for (char c : tok) {
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("bad word: '" + std::string(text) + "'");
      v = v * 10 + (c - '0');
      if (v > 1'000'000) throw std::invalid_argument("word entry too large");
    }
    w.push_back(v);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return w;
}

std::string to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // avoid overflow on INT128_MIN by peeling digits with negative absolute value
  std::string digits;
  int128 x = neg ? v : -v;
  while (x != 0) {
    int d = static_cast<int>(-(x % 10));
    digits += static_cast<char>('0' + d);
    x /= 10;
  }
  if (neg) digits += '-';
  return std::string(digits.rbegin(), digits.rend());
}

}  // namespace catwords
