#include "catwords/oracle.hpp"

#include <algorithm>
#include <stdexcept>

#include "catwords/checked_int.hpp"

namespace catwords {

namespace {

// Subtree sizes are skewed toward prefixes that end high, so the partition
// uses many more blocks than threads and hands them out dynamically.
constexpr int kParallelPrefixDepth = 8;  // c_8 = 1430 subtrees

void bump(std::vector<std::uint64_t>& counts, int k) {
  if (static_cast<int>(counts.size()) <= k) counts.resize(static_cast<std::size_t>(k) + 1, 0);
  counts[static_cast<std::size_t>(k)] = checked_add(counts[static_cast<std::size_t>(k)], 1ull);
}

void accumulate(std::vector<std::uint64_t>& into, const std::vector<std::uint64_t>& from) {
  if (into.size() < from.size()) into.resize(from.size(), 0);
  for (std::size_t k = 0; k < from.size(); ++k) into[k] = checked_add(into[k], from[k]);
}

void trim(std::vector<std::uint64_t>& counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
}

}  // namespace

std::uint64_t DescentVector::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t c : counts) t = checked_add(t, c);
  return t;
}

std::uint64_t count_avoiders(int n, const PatternSet& ps, const EnumerationLimits& limits) {
  check_catalan_cap(n, limits);
  PatternSet min = ps.minimized();
  std::uint64_t total = 0;
  scan_catalan(n, [&](const Word& w) {
    if (avoids(w, min)) total = checked_add(total, 1ull);
  });
  return total;
}

DescentVector count_by_descents(int n, const PatternSet& ps, const EnumerationLimits& limits) {
  check_catalan_cap(n, limits);
  PatternSet min = ps.minimized();
  DescentVector dv;
  dv.n = n;
  scan_catalan(n, [&](const Word& w) {
    if (avoids(w, min)) bump(dv.counts, descent_count(w));
  });
  if (dv.counts.empty()) dv.counts.push_back(0);
  return dv;
}

std::uint64_t count_avoiders_parallel(int n, const PatternSet& ps,
                                      const EnumerationLimits& limits) {
  check_catalan_cap(n, limits);
  PatternSet min = ps.minimized();
  std::vector<Word> prefixes = catalan_prefixes(n, kParallelPrefixDepth);
  std::vector<std::uint64_t> partial(prefixes.size(), 0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    std::uint64_t local = 0;
    scan_catalan_prefix(n, prefixes[i], [&](const Word& w) {
      if (avoids(w, min)) local = checked_add(local, 1ull);
    });
    partial[i] = local;
  }
  std::uint64_t total = 0;
  for (std::uint64_t c : partial) total = checked_add(total, c);
  return total;
}

DescentVector count_by_descents_parallel(int n, const PatternSet& ps,
                                         const EnumerationLimits& limits) {
  check_catalan_cap(n, limits);
  PatternSet min = ps.minimized();
  std::vector<Word> prefixes = catalan_prefixes(n, kParallelPrefixDepth);
  std::vector<std::vector<std::uint64_t>> partial(prefixes.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    std::vector<std::uint64_t> local;
    scan_catalan_prefix(n, prefixes[i], [&](const Word& w) {
      if (avoids(w, min)) bump(local, descent_count(w));
    });
    partial[i] = std::move(local);
  }
  DescentVector dv;
  dv.n = n;
  for (const auto& local : partial) accumulate(dv.counts, local);
  trim(dv.counts);
  if (dv.counts.empty()) dv.counts.push_back(0);
  return dv;
}

std::vector<Word> collect_avoiders(int n, const PatternSet& ps, const EnumerationLimits& limits) {
  check_catalan_cap(n, limits);
  PatternSet min = ps.minimized();
  std::vector<Word> out;
  scan_catalan(n, [&](const Word& w) {
    if (avoids(w, min)) out.push_back(w);
  });
  return out;
}

namespace {

bool in_d_set(const Word& w) {
  static const PatternSet kPair(std::vector<Pattern>{Pattern(Word{1, 0, 2}), Pattern(Word{1, 1, 0})});
  int n = static_cast<int>(w.size());
  int descent_at = -1;
  int descents = 0;
  for (int i = 0; i + 1 < n; ++i) {
    if (w[i] > w[i + 1]) {
      ++descents;
      descent_at = i;
    }
  }
  if (descents != 1) return false;
  for (int i = 0; i < descent_at; ++i) {
    if (w[i] == w[i + 1]) return false;
  }
  return avoids(w, kPair);
}

}  // namespace

std::uint64_t count_D_set(int n, const EnumerationLimits& limits) {
  check_catalan_cap(n, limits);
  std::uint64_t total = 0;
  scan_catalan(n, [&](const Word& w) {
    if (in_d_set(w)) total = checked_add(total, 1ull);
  });
  return total;
}

std::vector<Word> d_set_words(int n, const EnumerationLimits& limits) {
  check_catalan_cap(n, limits);
  std::vector<Word> out;
  scan_catalan(n, [&](const Word& w) {
    if (in_d_set(w)) out.push_back(w);
  });
  return out;
}

AscentCatalanResult compare_ascent_catalan(int n, const PatternSet& ps,
                                           const EnumerationLimits& limits) {
  check_ascent_cap(n, limits);
  PatternSet min = ps.minimized();
  // Subset inclusion C_n(ps) <= A_n(ps) is asserted, not assumed.
  scan_catalan(n, [&](const Word& w) {
    if (avoids(w, min) && !is_ascent_sequence(w))
      throw std::logic_error("Catalan avoider is not an ascent sequence");
  });
  // Ascent sequences are scanned lexicographically, so the first avoider
  // that fails to be Catalan is the canonical witness.
  AscentCatalanResult result;
  bool done = false;
  scan_ascent(n, [&](const Word& w) {
    if (done || !avoids(w, min)) return;
    if (!is_catalan(w)) {
      result.relation = AscentCatalanRelation::CatalanStrictSubset;
      result.witness = w;
      done = true;
    }
  });
  return result;
}

SuperfluousResult verify_superfluous(const Pattern& sigma, const Pattern& tau, int n_max,
                                     const EnumerationLimits& limits) {
  check_catalan_cap(n_max, limits);
  SuperfluousResult result;
  for (int n = 0; n <= n_max && result.superfluous; ++n) {
    scan_catalan(n, [&](const Word& w) {
      if (result.superfluous && !contains(w, sigma) && contains(w, tau)) {
        result.superfluous = false;
        result.witness_n = n;
        result.witness = w;
      }
    });
  }
  return result;
}

const std::vector<std::pair<Pattern, Pattern>>& length3_pattern_pairs() {
  static const std::vector<std::pair<Pattern, Pattern>> pairs = [] {
    std::vector<Pattern> pats = valid_patterns(3);
    std::vector<std::pair<Pattern, Pattern>> out;
    for (std::size_t i = 0; i < pats.size(); ++i) {
      for (std::size_t j = i + 1; j < pats.size(); ++j) out.emplace_back(pats[i], pats[j]);
    }
    return out;
  }();
  return pairs;
}

namespace {

// counts[pair][k] accumulated over one subtree of C_n
struct SweepBlock {
  std::vector<std::vector<std::uint64_t>> counts;

  explicit SweepBlock(std::size_t pairs) : counts(pairs) {}
};

void sweep_subtree(int n, const Word& prefix, const std::vector<Pattern>& pats,
                   const std::vector<std::pair<int, int>>& pair_idx, SweepBlock& block) {
  const std::size_t m = pats.size();
  std::vector<char> has(m, 0);
  scan_catalan_prefix(n, prefix, [&](const Word& w) {
    for (std::size_t p = 0; p < m; ++p) has[p] = contains(w, pats[p]) ? 1 : 0;
    int k = descent_count(w);
    for (std::size_t q = 0; q < pair_idx.size(); ++q) {
      if (!has[static_cast<std::size_t>(pair_idx[q].first)] &&
          !has[static_cast<std::size_t>(pair_idx[q].second)]) {
        bump(block.counts[q], k);
      }
    }
  });
}

}  // namespace

std::vector<std::vector<DescentVector>> sweep_length3_pairs(int n_max, bool parallel,
                                                            const EnumerationLimits& limits) {
  check_catalan_cap(n_max, limits);
  const std::vector<Pattern> pats = valid_patterns(3);
  const auto& pairs = length3_pattern_pairs();
  std::vector<std::pair<int, int>> pair_idx;
  for (const auto& [s, t] : pairs) {
    int si = static_cast<int>(std::find(pats.begin(), pats.end(), s) - pats.begin());
    int ti = static_cast<int>(std::find(pats.begin(), pats.end(), t) - pats.begin());
    pair_idx.emplace_back(si, ti);
  }

  std::vector<std::vector<DescentVector>> result(pairs.size());
  for (auto& per_pair : result) per_pair.resize(static_cast<std::size_t>(n_max) + 1);

  for (int n = 0; n <= n_max; ++n) {
    std::vector<Word> prefixes =
        parallel ? catalan_prefixes(n, kParallelPrefixDepth) : std::vector<Word>{Word{}};
    std::vector<SweepBlock> blocks(prefixes.size(), SweepBlock(pairs.size()));
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
      sweep_subtree(n, prefixes[i], pats, pair_idx, blocks[i]);
    }
    for (std::size_t q = 0; q < pairs.size(); ++q) {
      DescentVector dv;
      dv.n = n;
      for (const SweepBlock& b : blocks) accumulate(dv.counts, b.counts[q]);
      trim(dv.counts);
      if (dv.counts.empty()) dv.counts.push_back(0);
      result[q][static_cast<std::size_t>(n)] = std::move(dv);
    }
  }
  return result;
}

}  // namespace catwords
