#include "catwords/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "catwords/checked_int.hpp"
#include "catwords/dyck.hpp"
#include "catwords/generate.hpp"
#include "catwords/oracle.hpp"
#include "catwords/registry.hpp"

namespace catwords::cli {

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitUnknownPair = 3;
constexpr int kExitCap = 4;
constexpr int kExitOther = 5;

std::pair<Pattern, Pattern> parse_pair(const std::string& text) {
  PatternSet ps = parse_pattern_set(text);
  if (ps.size() != 2)
    throw std::invalid_argument("expected two distinct patterns, got '" + text + "'");
  return {ps.patterns()[0], ps.patterns()[1]};
}

std::string descent_vector_text(const DescentVector& dv) {
  std::string s;
  for (std::size_t k = 0; k < dv.counts.size(); ++k) {
    if (k) s += ' ';
    s += std::to_string(dv.counts[k]);
  }
  return s;
}

int cmd_enumerate(int n, const std::string& avoid, const EnumerationLimits& limits,
                  std::ostream& out) {
  std::optional<PatternSet> ps;
  if (!avoid.empty()) ps = parse_pattern_set(avoid).minimized();
  CatalanStream stream(n, limits);
  while (auto w = stream.next()) {
    if (ps && !avoids(*w, *ps)) continue;
    out << format_word(*w) << "\n";
  }
  return 0;
}

int cmd_count(int n, const std::string& avoid, bool by_descents, bool parallel,
              const EnumerationLimits& limits, std::ostream& out) {
  PatternSet ps;
  if (!avoid.empty()) ps = parse_pattern_set(avoid);
  if (by_descents) {
    DescentVector dv =
        parallel ? count_by_descents_parallel(n, ps, limits) : count_by_descents(n, ps, limits);
    out << descent_vector_text(dv) << "\n";
  } else {
    std::uint64_t c = parallel ? count_avoiders_parallel(n, ps, limits)
                               : count_avoiders(n, ps, limits);
    out << c << "\n";
  }
  return 0;
}

int cmd_classify(const std::string& pair_text, std::ostream& out) {
  auto [sigma, tau] = parse_pair(pair_text);
  const PairClassification& row = classify(sigma, tau);
  std::vector<TableRow> rows = emit_table();
  for (const TableRow& r : rows) {
    if (r.sigma == row.sigma.text() && r.tau == row.tau.text()) {
      out << "pair: " << r.sigma << "+" << r.tau << "\n";
      out << "kind: " << r.kind << "\n";
      out << "counts: " << r.formula_or_gf << "\n";
      out << "oeis: " << (r.oeis.empty() ? "-" : r.oeis)
          << (r.conjectural ? " (conjectural)" : "") << "\n";
      out << "wilf-class: " << r.wilf_class << "\n";
      out << "source: " << r.source << "\n";
      return 0;
    }
  }
  throw std::logic_error("classified pair missing from table");
}

int cmd_series(const std::string& pair_text, int n_max, bool bivariate,
               const EnumerationLimits& limits, std::ostream& out) {
  auto [sigma, tau] = parse_pair(pair_text);
  if (bivariate) {
    const RationalBgf& gf = registered_gf(sigma, tau);
    SeriesTable table = expand(gf, n_max);
    for (int n = 0; n <= n_max; ++n) {
      out << n << ":";
      const auto& row = table[static_cast<std::size_t>(n)];
      if (row.empty()) out << " 0";
      for (int128 c : row) out << " " << to_string(c);
      out << "\n";
    }
    return 0;
  }
  for (int n = 0; n <= n_max; ++n) {
    out << n << " " << to_string(predicted_count(sigma, tau, n, limits)) << "\n";
  }
  return 0;
}

int cmd_gf(const std::string& pair_text, std::ostream& out) {
  auto [sigma, tau] = parse_pair(pair_text);
  out << registered_gf(sigma, tau).text() << "\n";
  return 0;
}

int cmd_verify(const std::string& pair_text, int n_max, bool serial,
               const EnumerationLimits& limits, std::ostream& out) {
  struct Mismatch {
    std::string pair;
    int n;
    std::string oracle;
    std::string predicted;
  };
  std::optional<Mismatch> first;

  if (!pair_text.empty()) {
    auto [sigma, tau] = parse_pair(pair_text);
    classify(sigma, tau);  // unknown pairs fail before any counting
    for (int n = 0; n <= n_max && !first; ++n) {
      PatternSet ps({sigma, tau});
      std::uint64_t oracle =
          serial ? count_avoiders(n, ps, limits) : count_avoiders_parallel(n, ps, limits);
      int128 predicted = predicted_count(sigma, tau, n, limits);
      if (int128(oracle) != predicted) {
        first = Mismatch{sigma.text() + "+" + tau.text(), n, std::to_string(oracle),
                         to_string(predicted)};
      }
    }
    if (!first) {
      out << "ok: pair " << pair_text << ", n <= " << n_max << "\n";
      return 0;
    }
  } else {
    auto sweep = sweep_length3_pairs(n_max, !serial, limits);
    const auto& pairs = length3_pattern_pairs();
    for (std::size_t q = 0; q < pairs.size() && !first; ++q) {
      const auto& [sigma, tau] = pairs[q];
      for (int n = 0; n <= n_max && !first; ++n) {
        std::uint64_t oracle = sweep[q][static_cast<std::size_t>(n)].total();
        int128 predicted = predicted_count(sigma, tau, n, limits);
        if (int128(oracle) != predicted) {
          first = Mismatch{sigma.text() + "+" + tau.text(), n, std::to_string(oracle),
                           to_string(predicted)};
        }
      }
    }
    if (!first) {
      out << "ok: " << pairs.size() << " pairs, n <= " << n_max << "\n";
      return 0;
    }
  }
  out << "mismatch: pair " << first->pair << " n=" << first->n << " oracle=" << first->oracle
      << " predicted=" << first->predicted << "\n";
  return kExitMismatch;
}

int cmd_table(bool json, std::ostream& out) {
  out << (json ? table_to_json() : table_to_text());
  return 0;
}

int cmd_bfile(const std::string& pair_text, int n_max, const std::string& path,
              const EnumerationLimits& limits) {
  auto [sigma, tau] = parse_pair(pair_text);
  std::ostringstream body;
  for (int n = 0; n <= n_max; ++n) {
    body << n << " " << to_string(predicted_count(sigma, tau, n, limits)) << "\n";
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << body.str();
  if (!file.good()) throw std::runtime_error("write to '" + path + "' failed");
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact enumeration of Catalan words avoiding pairs of patterns"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  EnumerationLimits limits;
  app.add_option("--catalan-cap", limits.catalan_max, "enumeration ceiling for Catalan words")
      ->capture_default_str();
  app.add_option("--ascent-cap", limits.ascent_max, "enumeration ceiling for ascent sequences")
      ->capture_default_str();

  int n = 0;
  int n_max = 10;
  std::string avoid;
  std::string pair_text;
  std::string out_path;
  bool by_descents = false;
  bool parallel = false;
  bool serial = false;
  bool bivariate = false;
  bool json = false;

  CLI::App* c_enum = app.add_subcommand("enumerate", "stream avoiders, one word per line");
  c_enum->add_option("--n", n, "word length")->required();
  c_enum->add_option("--avoid", avoid, "patterns to avoid, e.g. \"100+210\"");

  CLI::App* c_count = app.add_subcommand("count", "count avoiders by brute force");
  c_count->add_option("--n", n, "word length")->required();
  c_count->add_option("--avoid", avoid, "patterns to avoid");
  c_count->add_flag("--by-descents", by_descents, "print the descent refinement");
  c_count->add_flag("--parallel", parallel, "use the prefix-partitioned kernel");

  CLI::App* c_classify = app.add_subcommand("classify", "look up a pair in the registry");
  c_classify->add_option("--pair", pair_text, "pattern pair \"sigma+tau\"")->required();

  CLI::App* c_series = app.add_subcommand("series", "print predicted counting coefficients");
  c_series->add_option("--pair", pair_text)->required();
  c_series->add_option("--n-max", n_max)->required();
  c_series->add_flag("--bivariate", bivariate, "refine by descents (pairs with a stored function)");

  CLI::App* c_gf = app.add_subcommand("gf", "print the stored generating function");
  c_gf->add_option("--pair", pair_text)->required();

  CLI::App* c_verify = app.add_subcommand("verify", "oracle-vs-registry sweep");
  c_verify->add_option("--n-max", n_max, "largest length checked")->capture_default_str();
  c_verify->add_option("--pair", pair_text, "restrict to one pair");
  c_verify->add_flag("--serial", serial, "disable prefix parallelism");

  CLI::App* c_table = app.add_subcommand("table", "emit the full classification table");
  c_table->add_flag("--json", json);

  CLI::App* c_bfile = app.add_subcommand("bfile", "write an OEIS-style b-file");
  c_bfile->add_option("--pair", pair_text)->required();
  c_bfile->add_option("--n-max", n_max)->required();
  c_bfile->add_option("--out", out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (c_enum->parsed()) return cmd_enumerate(n, avoid, limits, out);
    if (c_count->parsed()) return cmd_count(n, avoid, by_descents, parallel, limits, out);
    if (c_classify->parsed()) return cmd_classify(pair_text, out);
    if (c_series->parsed()) return cmd_series(pair_text, n_max, bivariate, limits, out);
    if (c_gf->parsed()) return cmd_gf(pair_text, out);
    if (c_verify->parsed()) return cmd_verify(pair_text, n_max, serial, limits, out);
    if (c_table->parsed()) return cmd_table(json, out);
    if (c_bfile->parsed()) return cmd_bfile(pair_text, n_max, out_path, limits);
  } catch (const cap_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitCap;
  } catch (const unknown_pair_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUnknownPair;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitOther;
  }
  err << "error: no subcommand\n";
  return kExitBadInput;
}

}  // namespace catwords::cli
