#include "catwords/registry.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "catwords/oracle.hpp"

namespace catwords {

namespace {

// canonical row order: shorter pattern first, then lexicographic
std::pair<Pattern, Pattern> canonical(const Pattern& a, const Pattern& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? std::make_pair(a, b) : std::make_pair(b, a);
  return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
}

constexpr int kGfTableDepth = 64;

const std::vector<std::vector<int128>>& gf_count_tables() {
  // row sums of every registered function, expanded once
  static const std::vector<std::vector<int128>> tables = [] {
    std::vector<std::vector<int128>> out;
    for (const RationalBgf& gf : registered_gfs()) out.push_back(row_sums(expand(gf, kGfTableDepth)));
    return out;
  }();
  return tables;
}

const std::vector<int128>& imported_012_counts() {
  static const std::vector<int128> counts = row_sums(expand(imported_gf_012(), kGfTableDepth));
  return counts;
}

}  // namespace

const PairClassification& classify(const Pattern& sigma, const Pattern& tau) {
  if (sigma == tau) throw unknown_pair_error("patterns of a pair must be distinct");
  auto [s, t] = canonical(sigma, tau);
  for (const PairClassification& row : registry_detail::all_rows()) {
    if (row.sigma == s && row.tau == t) return row;
  }
  throw unknown_pair_error("no classification for pair " + s.text() + "+" + t.text());
}

int128 predicted_count(const Pattern& sigma, const Pattern& tau, int n,
                       const EnumerationLimits& limits) {
  if (n < 0) throw std::invalid_argument("negative length");
  const PairClassification& row = classify(sigma, tau);
  switch (row.kind) {
    case ClassificationKind::SuperfluousReduction: {
      const Pattern& target = *row.reduction_target;
      if (target.entries() == Word{0, 1, 2}) {
        if (n > kGfTableDepth) throw std::invalid_argument("length above series table depth");
        return imported_012_counts()[static_cast<std::size_t>(n)];
      }
      return count_avoiders(n, PatternSet({target}), limits);
    }
    case ClassificationKind::UltimatelyConstant:
      if (n < row.valid_from) return row.initial_values[static_cast<std::size_t>(n)];
      return row.constant_value;
    case ClassificationKind::ClosedForm:
      if (n < row.valid_from) return row.initial_values[static_cast<std::size_t>(n)];
      return eval_formula(*row.formula, n);
    case ClassificationKind::GeneratingFunction:
      if (n > kGfTableDepth) throw std::invalid_argument("length above series table depth");
      return gf_count_tables()[static_cast<std::size_t>(row.gf_id)][static_cast<std::size_t>(n)];
  }
  throw std::logic_error("unreachable");
}

const RationalBgf& registered_gf(const Pattern& sigma, const Pattern& tau) {
  return registered_gfs()[static_cast<std::size_t>(registered_gf_id(sigma, tau))];
}

int registered_gf_id(const Pattern& sigma, const Pattern& tau) {
  const PairClassification& row = classify(sigma, tau);
  if (row.kind != ClassificationKind::GeneratingFunction)
    throw unknown_pair_error("pair " + row.sigma.text() + "+" + row.tau.text() +
                             " is not classified by a generating function");
  return row.gf_id;
}

OeisReport oeis_check(const Pattern& sigma, const Pattern& tau, int n_max,
                      const EnumerationLimits& limits) {
  const PairClassification& row = classify(sigma, tau);
  if (!row.oeis_id)
    throw std::invalid_argument("pair " + row.sigma.text() + "+" + row.tau.text() +
                                " carries no OEIS reference");
  const OeisSequence& seq = oeis_sequence(*row.oeis_id);
  OeisReport report;
  report.id = seq.id;
  report.conjectural = row.oeis_conjectural;
  // compare c_n with a(n + shift) wherever both sides are defined
  int lo = std::max(row.oeis_compare_from, seq.offset - row.oeis_shift);
  int hi = std::min(n_max, seq.offset + static_cast<int>(seq.terms.size()) - 1 - row.oeis_shift);
  report.first_n = lo;
  report.last_n = hi;
  if (hi < lo) throw std::invalid_argument("bundled terms do not cover the requested range");
  for (int n = lo; n <= hi; ++n) {
    int128 predicted = predicted_count(row.sigma, row.tau, n, limits);
    std::uint64_t term = seq.terms[static_cast<std::size_t>(n + row.oeis_shift - seq.offset)];
    if (predicted != int128(term)) {
      report.matched = false;
      report.mismatches.push_back({n, predicted, term});
    }
  }
  return report;
}

// ---- bijections -----------------------------------------------------------

const std::vector<std::pair<Pattern, Pattern>>& subset_bijection_pairs() {
  static const std::vector<std::pair<Pattern, Pattern>> pairs = {
      {Pattern(Word{0, 0, 1}), Pattern(Word{0, 2, 1})},
      {Pattern(Word{0, 0, 1}), Pattern(Word{1, 1, 0})},
      {Pattern(Word{0, 0, 1}), Pattern(Word{1, 2, 0})},
      {Pattern(Word{0, 1, 2}), Pattern(Word{1, 0, 0})},
      {Pattern(Word{0, 1, 2}), Pattern(Word{1, 0, 1})},
      {Pattern(Word{0, 1, 2}), Pattern(Word{1, 1, 0})},
  };
  return pairs;
}

namespace {

Word incr_then_plateau(int n, int k) {
  // 0 1 .. (k-2) followed by (k-1) repeated; the first plateau entry sits
  // at position k (1-based)
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i < k; ++i) w.push_back(i - 1);
  for (int i = k; i <= n; ++i) w.push_back(k - 1);
  return w;
}

Word zeros_then_ones(int n, int k) {
  Word w(static_cast<std::size_t>(n), 0);
  for (int i = k; i <= n; ++i) w[static_cast<std::size_t>(i - 1)] = 1;
  return w;
}

}  // namespace

Word subset_bijection_word(const Pattern& sigma, const Pattern& tau, int n,
                           std::vector<int> subset) {
  auto [s, t] = canonical(sigma, tau);
  const auto& pairs = subset_bijection_pairs();
  auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(s, t));
  if (it == pairs.end())
    throw std::invalid_argument("pair " + s.text() + "+" + t.text() +
                                " has no subset bijection");
  if (n < 1) throw std::invalid_argument("bijection needs n >= 1");
  std::sort(subset.begin(), subset.end());
  if (std::unique(subset.begin(), subset.end()) != subset.end())
    throw std::invalid_argument("subset entries must be distinct");
  if (subset.size() > 2) throw std::invalid_argument("subset has more than two elements");
  for (int v : subset) {
    if (v < 2 || v > n) throw std::invalid_argument("subset entry outside {2..n}");
  }

  const bool first_family = (s.entries() == Word{0, 0, 1});
  if (subset.empty()) return Word(static_cast<std::size_t>(n), 0);
  if (subset.size() == 1) {
    int k = subset[0];
    return first_family ? incr_then_plateau(n, k) : zeros_then_ones(n, k);
  }
  int k = subset[0];
  int j = subset[1];
  const Word& te = t.entries();
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  if (first_family) {
    if (te == Word{0, 2, 1}) {
      // 0 1 .. (k-2) | (k-1) .. (k-1) | 0 .. 0, zeros from position j
      for (int i = 1; i < k; ++i) w.push_back(i - 1);
      for (int i = k; i < j; ++i) w.push_back(k - 1);
      for (int i = j; i <= n; ++i) w.push_back(0);
    } else if (te == Word{1, 1, 0}) {
      // 0 1 .. (j-2) | (k-2) .. (k-2)
      for (int i = 1; i < j; ++i) w.push_back(i - 1);
      for (int i = j; i <= n; ++i) w.push_back(k - 2);
    } else {  // {001,120}
      // 0 1 .. (k-2) | (k-1) .. (k-1) | (k-2) .. (k-2), drop at position j
      for (int i = 1; i < k; ++i) w.push_back(i - 1);
      for (int i = k; i < j; ++i) w.push_back(k - 1);
      for (int i = j; i <= n; ++i) w.push_back(k - 2);
    }
  } else {
    if (te == Word{1, 0, 0}) {
      // zeros | ones from k | single zero at j | ones
      for (int i = 1; i < k; ++i) w.push_back(0);
      for (int i = k; i < j; ++i) w.push_back(1);
      w.push_back(0);
      for (int i = j + 1; i <= n; ++i) w.push_back(1);
    } else if (te == Word{1, 0, 1}) {
      // zeros | ones from k to j-1 | zeros from j
      for (int i = 1; i < k; ++i) w.push_back(0);
      for (int i = k; i < j; ++i) w.push_back(1);
      for (int i = j; i <= n; ++i) w.push_back(0);
    } else {  // {012,110}
      // zeros | single one at k | zeros through j | ones after j
      for (int i = 1; i < k; ++i) w.push_back(0);
      w.push_back(1);
      for (int i = k + 1; i <= j; ++i) w.push_back(0);
      for (int i = j + 1; i <= n; ++i) w.push_back(1);
    }
  }
  return w;
}

Word triple_bijection_word(int n, const std::array<int, 3>& subset) {
  int k = subset[0], m = subset[1], l = subset[2];
  if (n < 3) throw std::invalid_argument("bijection needs n >= 3");
  if (!(0 <= k && k < m && m < l && l <= n - 1))
    throw std::invalid_argument("need 0 <= k < m < l <= n-1");
  Word w;
  w.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= m; ++i) w.push_back(i - 1);      // strict rise 0..m-1
  for (int i = m + 1; i <= l; ++i) w.push_back(m);      // plateau of m through position l
  for (int i = l + 1; i <= n; ++i) w.push_back(k);      // tail of k
  return w;
}

// ---- table ----------------------------------------------------------------

namespace {

std::string kind_name(ClassificationKind kind) {
  switch (kind) {
    case ClassificationKind::SuperfluousReduction: return "superfluous-reduction";
    case ClassificationKind::UltimatelyConstant: return "ultimately-constant";
    case ClassificationKind::ClosedForm: return "closed-form";
    case ClassificationKind::GeneratingFunction: return "generating-function";
  }
  return "?";
}

std::string describe(const PairClassification& row) {
  switch (row.kind) {
    case ClassificationKind::SuperfluousReduction:
      return "c_n(" + row.reduction_target->text() + ")";
    case ClassificationKind::UltimatelyConstant: {
      std::string s;
      for (std::size_t i = 0; i < row.initial_values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(row.initial_values[i]);
      }
      s += " then " + std::to_string(row.constant_value) + " (n>=" +
           std::to_string(row.valid_from) + ")";
      return s;
    }
    case ClassificationKind::ClosedForm:
      return formula_text(*row.formula);
    case ClassificationKind::GeneratingFunction:
      return registered_gfs()[static_cast<std::size_t>(row.gf_id)].text();
  }
  return "?";
}

std::vector<const PairClassification*> ordered_rows() {
  std::vector<const PairClassification*> rows;
  for (const PairClassification& row : registry_detail::all_rows()) rows.push_back(&row);
  std::sort(rows.begin(), rows.end(), [](const PairClassification* a, const PairClassification* b) {
    // length-3 pairs first, then the (length-2, length-3) block, each lexicographic
    if ((a->sigma.size() == 2) != (b->sigma.size() == 2)) return b->sigma.size() == 2;
    if (a->sigma != b->sigma) return a->sigma < b->sigma;
    return a->tau < b->tau;
  });
  return rows;
}

}  // namespace

std::vector<TableRow> emit_table() {
  std::vector<TableRow> out;
  for (const PairClassification* row : ordered_rows()) {
    TableRow t;
    t.sigma = row->sigma.text();
    t.tau = row->tau.text();
    t.kind = kind_name(row->kind);
    t.formula_or_gf = describe(*row);
    t.oeis = row->oeis_id.value_or("");
    t.conjectural = row->oeis_conjectural;
    t.wilf_class = row->wilf_class;
    t.source = row->source;
    out.push_back(std::move(t));
  }
  return out;
}

std::string table_to_text() {
  std::vector<TableRow> rows = emit_table();
  std::size_t w_pair = 0, w_kind = 0, w_oeis = 4, w_wilf = 0, w_source = 0;
  for (const TableRow& r : rows) {
    w_pair = std::max(w_pair, r.sigma.size() + r.tau.size() + 1);
    w_kind = std::max(w_kind, r.kind.size());
    w_oeis = std::max(w_oeis, r.oeis.size() + (r.conjectural ? 1 : 0));
    w_wilf = std::max(w_wilf, r.wilf_class.size());
    w_source = std::max(w_source, r.source.size());
  }
  std::ostringstream os;
  auto pad = [&](const std::string& s, std::size_t w) {
    os << s;
    for (std::size_t i = s.size(); i < w + 2; ++i) os << ' ';
  };
  pad("pair", w_pair);
  pad("kind", w_kind);
  pad("oeis", w_oeis);
  pad("wilf", w_wilf);
  pad("source", w_source);
  os << "counts\n";
  for (const TableRow& r : rows) {
    pad(r.sigma + "+" + r.tau, w_pair);
    pad(r.kind, w_kind);
    pad(r.oeis + (r.conjectural ? "?" : ""), w_oeis);
    pad(r.wilf_class, w_wilf);
    pad(r.source, w_source);
    os << r.formula_or_gf << "\n";
  }
  return os.str();
}

std::string table_to_json() {
  nlohmann::json arr = nlohmann::json::array();
  for (const TableRow& r : emit_table()) {
    nlohmann::json obj;
    obj["sigma"] = r.sigma;
    obj["tau"] = r.tau;
    obj["kind"] = r.kind;
    obj["formula_or_gf"] = r.formula_or_gf;
    if (r.oeis.empty()) obj["oeis"] = nullptr;
    else obj["oeis"] = r.oeis;
    obj["conjectural"] = r.conjectural;
    obj["wilf_class"] = r.wilf_class;
    obj["source"] = r.source;
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

}  // namespace catwords
