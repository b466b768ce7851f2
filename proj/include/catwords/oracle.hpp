#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "catwords/generate.hpp"
#include "catwords/pattern.hpp"
#include "catwords/word.hpp"

namespace catwords {

// Brute-force ground truth. Everything here is computed by exhausting the
// generation space; nothing consults the registry. Each counting kernel
// exists twice: a plain serial reference and a prefix-partitioned parallel
// version that must produce bit-identical results.

struct DescentVector {
  int n = 0;
  std::vector<std::uint64_t> counts;  // counts[k] = avoiders with k descents

  std::uint64_t total() const;
  bool operator==(const DescentVector&) const = default;
};

std::uint64_t count_avoiders(int n, const PatternSet& ps, const EnumerationLimits& limits = {});
DescentVector count_by_descents(int n, const PatternSet& ps, const EnumerationLimits& limits = {});

std::uint64_t count_avoiders_parallel(int n, const PatternSet& ps,
                                      const EnumerationLimits& limits = {});
DescentVector count_by_descents_parallel(int n, const PatternSet& ps,
                                         const EnumerationLimits& limits = {});

// All avoiders of ps in C_n, lexicographic.
std::vector<Word> collect_avoiders(int n, const PatternSet& ps,
                                   const EnumerationLimits& limits = {});

// Words in C_n(102,110) with exactly one descent and no equal adjacent
// pair strictly before the descent position.
std::uint64_t count_D_set(int n, const EnumerationLimits& limits = {});
std::vector<Word> d_set_words(int n, const EnumerationLimits& limits = {});

enum class AscentCatalanRelation { Equal, CatalanStrictSubset };

struct AscentCatalanResult {
  AscentCatalanRelation relation = AscentCatalanRelation::Equal;
  // lexicographically first ascent-sequence avoider that is not Catalan
  std::optional<Word> witness;
};

// Compares A_n(ps) with C_n(ps) as sets. C_n(ps) is a subset of A_n(ps) by
// construction (asserted while scanning), so the sets differ exactly when
// some ascent-sequence avoider fails to be Catalan.
AscentCatalanResult compare_ascent_catalan(int n, const PatternSet& ps,
                                           const EnumerationLimits& limits = {});

struct SuperfluousResult {
  bool superfluous = true;
  int witness_n = -1;
  std::optional<Word> witness;  // avoids sigma, contains tau
};

// Bounded check that C_n(sigma,tau) = C_n(sigma) as sets for all n <= n_max.
SuperfluousResult verify_superfluous(const Pattern& sigma, const Pattern& tau, int n_max,
                                     const EnumerationLimits& limits = {});

// One pass over C_0..C_n_max scoring every unordered pair of the 13
// length-3 patterns at once. result[pair][n] is the descent vector; pairs
// are indexed as in length3_pattern_pairs(). Pure enumeration, used by the
// verification sweeps; agrees with count_by_descents entry by entry.
std::vector<std::vector<DescentVector>> sweep_length3_pairs(int n_max, bool parallel,
                                                            const EnumerationLimits& limits = {});

const std::vector<std::pair<Pattern, Pattern>>& length3_pattern_pairs();

}  // namespace catwords
