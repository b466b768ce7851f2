#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "catwords/word.hpp"

namespace catwords {

// Enumeration ceilings. These are configuration, not constants: every
// generator and every oracle operation takes a limits argument.
struct EnumerationLimits {
  int catalan_max = 18;
  int ascent_max = 12;
};

class cap_error : public std::length_error {
 public:
  explicit cap_error(const std::string& what) : std::length_error(what) {}
};

inline void check_catalan_cap(int n, const EnumerationLimits& limits) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (n > limits.catalan_max) throw cap_error("length above Catalan enumeration cap");
}

inline void check_ascent_cap(int n, const EnumerationLimits& limits) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (n > limits.ascent_max) throw cap_error("length above ascent-sequence enumeration cap");
}

namespace detail {

// Lexicographic successor among length-n Catalan words, leaving the first
// `fixed` entries untouched. Returns false once the block is exhausted.
inline bool next_catalan(Word& w, int fixed) {
  int n = static_cast<int>(w.size());
  for (int i = n - 1; i >= fixed; --i) {
    int bound = (i == 0) ? 0 : w[i - 1] + 1;
    if (w[i] < bound) {
      ++w[i];
      for (int j = i + 1; j < n; ++j) w[j] = 0;
      return true;
    }
  }
  return false;
}

// Same for ascent sequences; asc[i] caches the ascent count of w[0..i].
inline bool next_ascent(Word& w, std::vector<int>& asc, int fixed) {
  int n = static_cast<int>(w.size());
  for (int i = n - 1; i >= fixed; --i) {
    int bound = (i == 0) ? 0 : asc[i - 1] + 1;
    if (w[i] < bound) {
      ++w[i];
      asc[i] = (i == 0 ? 0 : asc[i - 1]) + ((i > 0 && w[i - 1] < w[i]) ? 1 : 0);
      // tail resets to 0; a zero after a value >= 1 adds no ascent
      for (int j = i + 1; j < n; ++j) {
        w[j] = 0;
        asc[j] = asc[i];
      }
      return true;
    }
  }
  return false;
}

}  // namespace detail

// Visit every length-n Catalan word extending `prefix`, in lexicographic
// order. The visited reference is only valid during the call.
template <typename F>
void scan_catalan_prefix(int n, const Word& prefix, F&& visit) {
  if (static_cast<int>(prefix.size()) > n) return;
  if (!is_catalan_prefix(prefix)) throw std::invalid_argument("invalid Catalan prefix");
  Word w(prefix);
  w.resize(n, 0);
  int fixed = static_cast<int>(prefix.size());
  const Word& cw = w;
  do {
    visit(cw);
  } while (detail::next_catalan(w, fixed));
}

template <typename F>
void scan_catalan(int n, F&& visit) {
  scan_catalan_prefix(n, Word{}, std::forward<F>(visit));
}

template <typename F>
void scan_ascent_prefix(int n, const Word& prefix, F&& visit) {
  if (static_cast<int>(prefix.size()) > n) return;
  if (!is_ascent_prefix(prefix)) throw std::invalid_argument("invalid ascent-sequence prefix");
  Word w(prefix);
  w.resize(n, 0);
  std::vector<int> asc(std::max(n, 1), 0);
  for (int i = 1; i < n; ++i) asc[i] = asc[i - 1] + (w[i - 1] < w[i] ? 1 : 0);
  int fixed = static_cast<int>(prefix.size());
  const Word& cw = w;
  do {
    visit(cw);
  } while (detail::next_ascent(w, asc, fixed));
}

template <typename F>
void scan_ascent(int n, F&& visit) {
  scan_ascent_prefix(n, Word{}, std::forward<F>(visit));
}

// All valid length-min(n,depth) prefixes of length-n Catalan words, in
// lexicographic order. Partitioning the generation space by these prefixes
// is how parallel counting keeps results bit-identical to a serial scan.
inline std::vector<Word> catalan_prefixes(int n, int depth) {
  int d = std::min(n, depth);
  std::vector<Word> out;
  scan_catalan(d, [&](const Word& w) { out.push_back(w); });
  return out;
}

// Pull-style lexicographic streams, used by the CLI. Words are produced one
// at a time; nothing is materialized.
class CatalanStream {
 public:
  CatalanStream(int n, const EnumerationLimits& limits = {}, Word prefix = {});
  std::optional<Word> next();

 private:
  Word w_;
  int fixed_ = 0;
  bool started_ = false;
  bool done_ = false;
};

class AscentStream {
 public:
  AscentStream(int n, const EnumerationLimits& limits = {}, Word prefix = {});
  std::optional<Word> next();

 private:
  Word w_;
  std::vector<int> asc_;
  int fixed_ = 0;
  bool started_ = false;
  bool done_ = false;
};

inline CatalanStream::CatalanStream(int n, const EnumerationLimits& limits, Word prefix) {
  check_catalan_cap(n, limits);
  if (static_cast<int>(prefix.size()) > n) throw std::invalid_argument("prefix longer than word");
  if (!is_catalan_prefix(prefix)) throw std::invalid_argument("invalid Catalan prefix");
  fixed_ = static_cast<int>(prefix.size());
  w_ = std::move(prefix);
  w_.resize(n, 0);
}

inline std::optional<Word> CatalanStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return w_;
  }
  if (!detail::next_catalan(w_, fixed_)) {
    done_ = true;
    return std::nullopt;
  }
  return w_;
}

inline AscentStream::AscentStream(int n, const EnumerationLimits& limits, Word prefix) {
  check_ascent_cap(n, limits);
  if (static_cast<int>(prefix.size()) > n) throw std::invalid_argument("prefix longer than word");
  if (!is_ascent_prefix(prefix)) throw std::invalid_argument("invalid ascent-sequence prefix");
  fixed_ = static_cast<int>(prefix.size());
  w_ = std::move(prefix);
  w_.resize(n, 0);
  asc_.assign(std::max(n, 1), 0);
  for (int i = 1; i < n; ++i) asc_[i] = asc_[i - 1] + (w_[i - 1] < w_[i] ? 1 : 0);
}

inline std::optional<Word> AscentStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    return w_;
  }
  if (!detail::next_ascent(w_, asc_, fixed_)) {
    done_ = true;
    return std::nullopt;
  }
  return w_;
}

}  // namespace catwords
