#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "catwords/formulas.hpp"
#include "catwords/generate.hpp"
#include "catwords/gf.hpp"
#include "catwords/pattern.hpp"

namespace catwords {

// The registry holds one classification per unordered pair of distinct
// length-3 patterns (78 rows) and per (length-2, length-3) pair (39 rows),
// as a single declarative table. Each row carries a source label naming
// the result family in the registry catalog (see README) plus the OEIS
// reference where one exists.

enum class ClassificationKind {
  SuperfluousReduction,
  UltimatelyConstant,
  ClosedForm,
  GeneratingFunction,
};

class unknown_pair_error : public std::invalid_argument {
 public:
  explicit unknown_pair_error(const std::string& what) : std::invalid_argument(what) {}
};

struct PairClassification {
  Pattern sigma;  // canonical order: sigma < tau (or |sigma| < |tau|)
  Pattern tau;
  ClassificationKind kind = ClassificationKind::ClosedForm;

  // SuperfluousReduction: counting collapses to the single pattern
  std::optional<Pattern> reduction_target;

  // ClosedForm / UltimatelyConstant: c_n = initial_values[n] for
  // n < valid_from, then the formula (or the constant) takes over
  std::optional<FormulaId> formula;
  int valid_from = 0;
  std::vector<std::uint64_t> initial_values;
  std::uint64_t constant_value = 0;  // UltimatelyConstant only

  int gf_id = -1;  // GeneratingFunction: index into registered_gfs()

  std::optional<std::string> oeis_id;
  bool oeis_conjectural = false;
  int oeis_shift = 0;       // sequence term a(n + shift) equals c_n
  int oeis_compare_from = 0;

  std::string wilf_class;
  std::string source;
};

const PairClassification& classify(const Pattern& sigma, const Pattern& tau);

// The registry's predicted c_n(sigma, tau). GeneratingFunction rows expand
// the stored function; SuperfluousReduction rows fall back to the oracle on
// the remaining pattern, except sigma = 012 whose imported function is used.
int128 predicted_count(const Pattern& sigma, const Pattern& tau, int n,
                       const EnumerationLimits& limits = {});

// Shared generating-function table. Wilf-equivalent pairs proved by the
// same function reference the same entry, so identity is index equality.
const std::vector<RationalBgf>& registered_gfs();
const RationalBgf& registered_gf(const Pattern& sigma, const Pattern& tau);
int registered_gf_id(const Pattern& sigma, const Pattern& tau);

// The single-pattern function for 012-avoiders, imported from earlier work
// because two registered functions consume it.
const RationalBgf& imported_gf_012();

// ---- OEIS fixtures -------------------------------------------------------

struct OeisSequence {
  std::string id;
  int offset = 0;
  std::vector<std::uint64_t> terms;  // a(offset), a(offset+1), ...
};

const OeisSequence& oeis_sequence(const std::string& id);  // throws if not bundled

struct OeisMismatch {
  int n = 0;
  int128 predicted = 0;
  std::uint64_t term = 0;
};

struct OeisReport {
  std::string id;
  bool conjectural = false;
  int first_n = 0;  // compared range (pair-side indices)
  int last_n = -1;
  bool matched = true;
  std::vector<OeisMismatch> mismatches;
};

OeisReport oeis_check(const Pattern& sigma, const Pattern& tau, int n_max,
                      const EnumerationLimits& limits = {});

// ---- explicit bijections -------------------------------------------------

// For the six pairs counted by C(n,2)+1, the avoider set is the image of
// the subsets of {2..n} with at most two elements. Returns the image word;
// subset entries are 1-based positions in the word.
Word subset_bijection_word(const Pattern& sigma, const Pattern& tau, int n,
                           std::vector<int> subset);
const std::vector<std::pair<Pattern, Pattern>>& subset_bijection_pairs();

// For the pair {001,210}: 3-element subsets {k < m < l} of {0..n-1} map to
// the one-descent avoiders; together with the n descent-free words this
// exhausts the set.
Word triple_bijection_word(int n, const std::array<int, 3>& subset);

// ---- full table ----------------------------------------------------------

struct TableRow {
  std::string sigma;
  std::string tau;
  std::string kind;
  std::string formula_or_gf;
  std::string oeis;  // empty when none
  bool conjectural = false;
  std::string wilf_class;
  std::string source;
};

std::vector<TableRow> emit_table();  // 78 + 39 rows, deterministic order
std::string table_to_text();
std::string table_to_json();

namespace registry_detail {
const std::vector<PairClassification>& all_rows();
}

}  // namespace catwords
