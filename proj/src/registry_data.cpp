#include <map>

#include "catwords/registry.hpp"

// The registry's source of truth. Every classification row and every
// stored generating function lives in this file so the whole table can be
// audited in one place against the source labels it carries.
//
// GF entries 0 ({000,021}) and 6 ({000,110}) are stored in corrected form.
// The commonly quoted expressions for those two pairs fail exhaustive
// enumeration (a spurious x^2*y term, resp. a misplaced y in the
// denominator); the corrected functions agree with brute-force counts at
// every length and descent number, and their y=1 specializations differ
// only in the x^2 coefficient of the first one (2, not 3: there are two
// words of length 2). The bivariate oracle tests pin this down.

namespace catwords {

namespace {

Poly2 parse_poly(std::initializer_list<Poly2::Term> terms) { return Poly2(terms); }

struct GfEntry {
  const char* name;
  RationalBgf gf;
};

std::vector<RationalBgf> make_gfs() {
  std::vector<RationalBgf> gfs;

  // 0: {000,021}; -(2x^4y + x^3y + 1)/(x^2 + x - 1)
  gfs.push_back({parse_poly({{4, 1, 2}, {3, 1, 1}, {0, 0, 1}}),
                 {parse_poly({{2, 0, 1}, {1, 0, 1}, {0, 0, -1}})},
                 true});

  // 1: {100,120} and {110,120}; -(x-1)^2/(x^3y - 2x^2 + 3x - 1)
  gfs.push_back({parse_poly({{2, 0, 1}, {1, 0, -2}, {0, 0, 1}}),
                 {parse_poly({{3, 1, 1}, {2, 0, -2}, {1, 0, 3}, {0, 0, -1}})},
                 true});

  // 2: {021,110}; -(x^5y + x^4y - x^4 - x^3y + 4x^3 - 6x^2 + 4x - 1)/((2x-1)(x-1)^3)
  gfs.push_back({parse_poly({{5, 1, 1}, {4, 1, 1}, {4, 0, -1}, {3, 1, -1}, {3, 0, 4},
                             {2, 0, -6}, {1, 0, 4}, {0, 0, -1}}),
                 {parse_poly({{1, 0, 2}, {0, 0, -1}}),
                  parse_poly({{1, 0, 1}, {0, 0, -1}}),
                  parse_poly({{1, 0, 1}, {0, 0, -1}}),
                  parse_poly({{1, 0, 1}, {0, 0, -1}})},
                 true});

  // 3: {110,201}; (x^4y - x^3 + 3x^2 - 3x + 1)/((x-1)(x^3y - 2x^2 + 3x - 1))
  gfs.push_back({parse_poly({{4, 1, 1}, {3, 0, -1}, {2, 0, 3}, {1, 0, -3}, {0, 0, 1}}),
                 {parse_poly({{1, 0, 1}, {0, 0, -1}}),
                  parse_poly({{3, 1, 1}, {2, 0, -2}, {1, 0, 3}, {0, 0, -1}})},
                 false});

  // 4: {102,201}
  gfs.push_back({parse_poly({{5, 1, 1}, {4, 2, 1}, {5, 0, -1}, {4, 1, -5}, {4, 0, 5},
                             {3, 1, 6}, {3, 0, -10}, {2, 1, -2}, {2, 0, 10}, {1, 0, -5},
                             {0, 0, 1}}),
                 {parse_poly({{1, 0, -1}, {0, 0, 1}}),
                  parse_poly({{2, 1, 1}, {2, 0, -1}, {1, 0, 2}, {0, 0, -1}}),
                  parse_poly({{2, 1, 1}, {2, 0, -2}, {1, 0, 3}, {0, 0, -1}})},
                 false});

  // 5: {100,110}; (x^4y - x^4 + 2x^3 - 2x + 1)/((x-1)(x^3y - 2x^3 + x^2 + 2x - 1))
  gfs.push_back({parse_poly({{4, 1, 1}, {4, 0, -1}, {3, 0, 2}, {1, 0, -2}, {0, 0, 1}}),
                 {parse_poly({{1, 0, 1}, {0, 0, -1}}),
                  parse_poly({{3, 1, 1}, {3, 0, -2}, {2, 0, 1}, {1, 0, 2}, {0, 0, -1}})},
                 false});

  // 6: {000,110}; (x^3y + x^3 - x^2 - x + 1)/((-x+1)(-x^4y + x^4 + x^3 - 2x^2 - x + 1))
  gfs.push_back({parse_poly({{3, 1, 1}, {3, 0, 1}, {2, 0, -1}, {1, 0, -1}, {0, 0, 1}}),
                 {parse_poly({{1, 0, -1}, {0, 0, 1}}),
                  parse_poly({{4, 1, -1}, {4, 0, 1}, {3, 0, 1}, {2, 0, -2}, {1, 0, -1},
                              {0, 0, 1}})},
                 false});

  // 7: {000,102} and {000,201}; (x^2y - 1)/(x^4y + x^2y + x^2 + x - 1)
  gfs.push_back({parse_poly({{2, 1, 1}, {0, 0, -1}}),
                 {parse_poly({{4, 1, 1}, {2, 1, 1}, {2, 0, 1}, {1, 0, 1}, {0, 0, -1}})},
                 false});

  // 8: {000,120}; -(x^4y + x^3y + 1)/(x^4y + x^2 + x - 1)
  gfs.push_back({parse_poly({{4, 1, 1}, {3, 1, 1}, {0, 0, 1}}),
                 {parse_poly({{4, 1, 1}, {2, 0, 1}, {1, 0, 1}, {0, 0, -1}})},
                 true});

  // 9: {201,210}
  gfs.push_back({parse_poly({{4, 1, 1}, {4, 0, -2}, {3, 1, -3}, {3, 0, 7}, {2, 1, 1},
                             {2, 0, -9}, {1, 0, 5}, {0, 0, -1}}),
                 {parse_poly({{1, 0, 2}, {0, 0, -1}}),
                  parse_poly({{1, 0, 1}, {0, 0, -1}}),
                  parse_poly({{2, 1, 1}, {2, 0, -2}, {1, 0, 3}, {0, 0, -1}})},
                 false});

  // 10: {102,210}; degree-7 numerator over (x-1)^3 (2x-1)^2 (x^2y - x^2 + 2x - 1)
  gfs.push_back({parse_poly({{7, 1, 2}, {7, 0, -2}, {6, 0, 13}, {6, 1, -10}, {6, 2, -1},
                             {5, 0, -36}, {5, 1, 19}, {4, 0, 55}, {4, 1, -17}, {3, 0, -50},
                             {3, 1, 7}, {2, 0, 27}, {2, 1, -1}, {1, 0, -8}, {0, 0, 1}}),
                 {parse_poly({{1, 0, 1}, {0, 0, -1}}),
                  parse_poly({{1, 0, 1}, {0, 0, -1}}),
                  parse_poly({{1, 0, 1}, {0, 0, -1}}),
                  parse_poly({{1, 0, 2}, {0, 0, -1}}),
                  parse_poly({{1, 0, 2}, {0, 0, -1}}),
                  parse_poly({{2, 1, 1}, {2, 0, -1}, {1, 0, 2}, {0, 0, -1}})},
                 false});

  // 11: {100,102}
  gfs.push_back({parse_poly({{5, 1, 1}, {4, 1, -1}, {3, 0, -1}, {3, 1, 2}, {2, 0, 3},
                             {2, 1, -1}, {1, 0, -3}, {0, 0, 1}}),
                 {parse_poly({{1, 0, 1}, {0, 0, -1}}),
                  parse_poly({{4, 1, 1}, {3, 1, -1}, {2, 0, -2}, {2, 1, 1}, {1, 0, 3},
                              {0, 0, -1}})},
                 false});

  // 12: {000,210}; -(x+1)(x^3 + x^3y - 2x + 1) over
  //     (x^4 - x^4y + x^3 - 2x^2 - x + 1)(x^2 + x - 1), numerator expanded
  gfs.push_back({parse_poly({{4, 1, 1}, {4, 0, 1}, {3, 1, 1}, {3, 0, 1}, {2, 0, -2},
                             {1, 0, -1}, {0, 0, 1}}),
                 {parse_poly({{4, 0, 1}, {4, 1, -1}, {3, 0, 1}, {2, 0, -2}, {1, 0, -1},
                              {0, 0, 1}}),
                  parse_poly({{2, 0, 1}, {1, 0, 1}, {0, 0, -1}})},
                 true});

  // 13: {100,210}; single rational form of
  //     (1-x)/(1-2x) - x^3y/((2x-1)(2x^3 - x^3y + x^2 - 3x + 1))
  gfs.push_back({parse_poly({{4, 1, 1}, {4, 0, -2}, {3, 0, 1}, {2, 0, 4}, {1, 0, -4},
                             {0, 0, 1}}),
                 {parse_poly({{1, 0, -2}, {0, 0, 1}}),
                  parse_poly({{3, 0, 2}, {3, 1, -1}, {2, 0, 1}, {1, 0, -3}, {0, 0, 1}})},
                 false});

  return gfs;
}

struct RowSpec {
  const char* sigma;
  const char* tau;
  FormulaId formula;
  int valid_from;
  std::vector<std::uint64_t> initial;
  const char* oeis;  // nullptr when none
  int oeis_shift;
  int oeis_compare_from;
  const char* wilf;
  const char* source;
};

// sigma column -> superfluous taus
const std::map<std::string, std::vector<std::string>>& superfluous_table() {
  static const std::map<std::string, std::vector<std::string>> table = {
      {"000", {"100"}},
      {"001", {"101", "102", "201"}},
      {"010", {"021", "100", "101", "102", "110", "120", "201", "210"}},
      {"011", {"021", "101", "102", "110", "201", "210"}},
      {"012", {"021", "102", "120", "201", "210"}},
      {"021", {"201", "210"}},
      {"101", {"102", "201"}},
      {"110", {"210"}},
      {"120", {"201", "210"}},
  };
  return table;
}

const std::vector<RowSpec>& closed_form_rows() {
  static const std::vector<RowSpec> rows = {
      {"000", "001", FormulaId::Fib, 0, {}, "A000045", 1, 0, "fib", "prop-15a"},
      {"000", "010", FormulaId::Fib, 0, {}, "A000045", 1, 0, "fib", "prop-15a"},
      {"000", "101", FormulaId::PowTwo, 1, {1}, "A000079", -1, 1, "pow2", "prop-08"},
      {"001", "010", FormulaId::Identity_n, 1, {1}, nullptr, 0, 0, "seq-n", "prop-06"},
      {"001", "011", FormulaId::Identity_n, 1, {1}, nullptr, 0, 0, "seq-n", "prop-06"},
      {"001", "012", FormulaId::Identity_n, 1, {1}, nullptr, 0, 0, "seq-n", "prop-06"},
      {"010", "011", FormulaId::Identity_n, 1, {1}, nullptr, 0, 0, "seq-n", "prop-06"},
      {"010", "012", FormulaId::Identity_n, 1, {1}, nullptr, 0, 0, "seq-n", "prop-06"},
      {"011", "012", FormulaId::Identity_n, 1, {1}, nullptr, 0, 0, "seq-n", "prop-06"},
      {"001", "021", FormulaId::Binom2Plus1, 2, {1, 1}, "A000124", -1, 1, "binom2", "prop-14"},
      {"001", "110", FormulaId::Binom2Plus1, 2, {1, 1}, "A000124", -1, 1, "binom2", "prop-14"},
      {"001", "120", FormulaId::Binom2Plus1, 2, {1, 1}, "A000124", -1, 1, "binom2", "prop-14"},
      {"012", "100", FormulaId::Binom2Plus1, 2, {1, 1}, "A000124", -1, 1, "binom2", "prop-14"},
      {"012", "101", FormulaId::Binom2Plus1, 2, {1, 1}, "A000124", -1, 1, "binom2", "prop-14"},
      {"012", "110", FormulaId::Binom2Plus1, 2, {1, 1}, "A000124", -1, 1, "binom2", "prop-14"},
      {"001", "100", FormulaId::FibPlus1Minus1, 1, {1}, nullptr, 0, 0, "fib-minus-1", "prop-15b"},
      {"001", "210", FormulaId::Binom3PlusN, 3, {1, 1, 2}, "A000125", -1, 1, "binom3", "prop-13"},
      {"011", "100", FormulaId::TwoNMinusTwo, 2, {1, 1}, "A005843", -1, 2, "2n-2", "prop-07"},
      {"011", "120", FormulaId::TwoNMinusTwo, 2, {1, 1}, "A005843", -1, 2, "2n-2", "prop-07"},
      {"021", "100", FormulaId::PowTwoMinusN, 0, {}, "A000325", 0, 0, "pow2-minus-n", "prop-10"},
      {"021", "101", FormulaId::PowTwoMinusN, 0, {}, "A000325", 0, 0, "pow2-minus-n", "prop-10"},
      {"101", "110", FormulaId::PowTwoMinusN, 0, {}, "A000325", 0, 0, "pow2-minus-n", "prop-10"},
      {"101", "120", FormulaId::PowTwoMinusN, 0, {}, "A000325", 0, 0, "pow2-minus-n", "prop-10"},
      {"021", "102", FormulaId::ThreePowTwoFamily, 1, {1}, "A116702", 0, 1, "three-pow2", "prop-12"},
      {"102", "110", FormulaId::ThreePowTwoFamily, 1, {1}, "A116702", 0, 1, "three-pow2", "prop-12"},
      {"021", "120", FormulaId::NPlus2Pow2, 3, {1, 1, 2}, "A045623", -1, 1, "n-plus-2-pow2", "prop-11"},
      {"100", "101", FormulaId::Pell, 1, {1}, "A000129", 0, 1, "pell", "prop-15d"},
      {"100", "201", FormulaId::FibEven, 1, {1}, "A001519", 0, 0, "fib-even", "prop-15c"},
      {"101", "210", FormulaId::NMinus1Pow2Plus1, 2, {1, 1}, "A005183", -1, 2, "n-minus-1-pow2", "prop-09"},
      {"102", "120", FormulaId::NMinus1Pow2Plus1, 2, {1, 1}, "A005183", -1, 2, "n-minus-1-pow2", "prop-09"},
  };
  return rows;
}

struct GfRowSpec {
  const char* sigma;
  const char* tau;
  int gf_id;
  const char* oeis;
  int oeis_shift;
  int oeis_compare_from;
  bool conjectural;
  const char* wilf;
  const char* source;
};

const std::vector<GfRowSpec>& gf_rows() {
  static const std::vector<GfRowSpec> rows = {
      {"000", "021", 0, nullptr, 0, 0, false, "gf-000-021", "prop-16"},
      {"100", "120", 1, "A034943", 1, 0, false, "gf-100-120", "prop-17"},
      {"110", "120", 1, "A034943", 1, 0, false, "gf-100-120", "prop-18"},
      {"021", "110", 2, nullptr, 0, 0, false, "gf-021-110", "prop-19"},
      {"110", "201", 3, nullptr, 0, 0, false, "gf-110-201", "prop-20"},
      {"102", "201", 4, nullptr, 0, 0, false, "gf-102-201", "prop-21"},
      {"100", "110", 5, nullptr, 0, 0, false, "gf-100-110", "prop-23"},
      {"000", "110", 6, nullptr, 0, 0, false, "gf-000-110", "prop-24"},
      {"000", "102", 7, nullptr, 0, 0, false, "gf-000-102", "prop-25"},
      {"000", "201", 7, nullptr, 0, 0, false, "gf-000-102", "prop-25"},
      {"000", "120", 8, nullptr, 0, 0, false, "gf-000-120", "prop-26"},
      {"201", "210", 9, nullptr, 0, 0, false, "gf-102-201", "prop-27"},
      {"102", "210", 10, nullptr, 0, 0, false, "gf-102-210", "prop-28"},
      {"100", "102", 11, nullptr, 0, 0, false, "gf-100-102", "prop-29"},
      {"000", "210", 12, nullptr, 0, 0, false, "gf-000-210", "prop-30"},
      {"100", "210", 13, "A267905", 0, 1, true, "gf-100-210", "prop-31"},
  };
  return rows;
}

PairClassification base_row(const std::string& s, const std::string& t) {
  PairClassification row;
  row.sigma = Pattern(parse_word(s));
  row.tau = Pattern(parse_word(t));
  return row;
}

std::vector<PairClassification> make_rows() {
  std::vector<PairClassification> rows;

  // ultimately constant (the only two cases)
  {
    PairClassification r = base_row("000", "011");
    r.kind = ClassificationKind::UltimatelyConstant;
    r.formula = FormulaId::UltConst3;
    r.valid_from = 3;
    r.initial_values = {1, 1, 2};
    r.constant_value = 3;
    r.wilf_class = "uc-3";
    r.source = "prop-05";
    rows.push_back(std::move(r));
  }
  {
    PairClassification r = base_row("000", "012");
    r.kind = ClassificationKind::UltimatelyConstant;
    r.formula = FormulaId::UltConstZero;
    r.valid_from = 5;
    r.initial_values = {1, 1, 2, 3, 3};
    r.constant_value = 0;
    r.wilf_class = "uc-0";
    r.source = "prop-05";
    rows.push_back(std::move(r));
  }

  for (const RowSpec& def : closed_form_rows()) {
    PairClassification r = base_row(def.sigma, def.tau);
    r.kind = ClassificationKind::ClosedForm;
    r.formula = def.formula;
    r.valid_from = def.valid_from;
    r.initial_values = def.initial;
    if (def.oeis) {
      r.oeis_id = def.oeis;
      r.oeis_shift = def.oeis_shift;
      r.oeis_compare_from = def.oeis_compare_from;
    }
    r.wilf_class = def.wilf;
    r.source = def.source;
    rows.push_back(std::move(r));
  }

  for (const GfRowSpec& def : gf_rows()) {
    PairClassification r = base_row(def.sigma, def.tau);
    r.kind = ClassificationKind::GeneratingFunction;
    r.gf_id = def.gf_id;
    if (def.oeis) {
      r.oeis_id = def.oeis;
      r.oeis_shift = def.oeis_shift;
      r.oeis_compare_from = def.oeis_compare_from;
      r.oeis_conjectural = def.conjectural;
    }
    r.wilf_class = def.wilf;
    r.source = def.source;
    rows.push_back(std::move(r));
  }

  for (const auto& [sigma, taus] : superfluous_table()) {
    for (const std::string& tau : taus) {
      PairClassification r = base_row(sigma, tau);
      r.kind = ClassificationKind::SuperfluousReduction;
      r.reduction_target = r.sigma;
      r.wilf_class = "single-" + sigma;
      r.source = "table-1";
      rows.push_back(std::move(r));
    }
  }

  // (length-2, length-3) rows
  for (const Pattern& three : valid_patterns(3)) {
    const std::string t = three.text();
    {
      PairClassification r = base_row("00", t);
      if (t == "012") {
        r.kind = ClassificationKind::UltimatelyConstant;
        r.formula = FormulaId::ZeroFromN;
        r.valid_from = 3;
        r.initial_values = {1, 1, 1};
        r.constant_value = 0;
        r.wilf_class = "eventually-zero";
      } else {
        r.kind = ClassificationKind::ClosedForm;
        r.formula = FormulaId::One;
        r.valid_from = 0;
        r.wilf_class = "one";
      }
      r.source = "prop-04";
      rows.push_back(std::move(r));
    }
    {
      PairClassification r = base_row("01", t);
      if (t == "000") {
        r.kind = ClassificationKind::UltimatelyConstant;
        r.formula = FormulaId::ZeroFromN;
        r.valid_from = 3;
        r.initial_values = {1, 1, 1};
        r.constant_value = 0;
        r.wilf_class = "eventually-zero";
      } else {
        r.kind = ClassificationKind::ClosedForm;
        r.formula = FormulaId::One;
        r.valid_from = 0;
        r.wilf_class = "one";
      }
      r.source = "prop-04";
      rows.push_back(std::move(r));
    }
    {
      PairClassification r = base_row("10", t);
      r.kind = ClassificationKind::ClosedForm;
      if (t == "000") {
        r.formula = FormulaId::Fib;
        r.valid_from = 0;
        r.wilf_class = "fib";
      } else if (t == "001" || t == "011" || t == "012") {
        r.formula = FormulaId::Identity_n;
        r.valid_from = 1;
        r.initial_values = {1};
        r.wilf_class = "seq-n";
      } else {
        r.formula = FormulaId::PowTwo;
        r.valid_from = 1;
        r.initial_values = {1};
        r.wilf_class = "pow2";
      }
      r.source = "prop-04";
      rows.push_back(std::move(r));
    }
  }

  return rows;
}

}  // namespace

const std::vector<RationalBgf>& registered_gfs() {
  static const std::vector<RationalBgf> gfs = make_gfs();
  return gfs;
}

const RationalBgf& imported_gf_012() {
  // (1 - x + x^2 - x^2y)/(1 - 2x + x^2 - x^2y)
  static const RationalBgf gf = {
      parse_poly({{2, 1, -1}, {2, 0, 1}, {1, 0, -1}, {0, 0, 1}}),
      {parse_poly({{2, 1, -1}, {2, 0, 1}, {1, 0, -2}, {0, 0, 1}})},
      false};
  return gf;
}

namespace registry_detail {

const std::vector<PairClassification>& all_rows() {
  static const std::vector<PairClassification> rows = make_rows();
  return rows;
}

}  // namespace registry_detail

}  // namespace catwords
