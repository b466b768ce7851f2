#include "catwords/gf.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace catwords {

Poly2 RationalBgf::denominator() const {
  Poly2 d = Poly2::constant(1);
  for (const Poly2& f : denominator_factors) d = d * f;
  return d;
}

Poly2 RationalBgf::signed_numerator() const { return leading_minus ? -numerator : numerator; }

std::string RationalBgf::text() const {
  std::string out;
  if (leading_minus) out += "-";
  out += "(" + numerator.text() + ") / ";
  if (denominator_factors.size() == 1) {
    out += "(" + denominator_factors[0].text() + ")";
  } else {
    out += "(";
    for (std::size_t i = 0; i < denominator_factors.size(); ++i) {
      if (i) out += "*";
      out += "(" + denominator_factors[i].text() + ")";
    }
    out += ")";
  }
  return out;
}

namespace {

// rows of a Poly2 grouped by x-degree: row[dx] is a dense vector over dy
std::map<int, std::vector<int128>> x_rows(const Poly2& p) {
  std::map<int, std::vector<int128>> rows;
  for (const Poly2::Term& t : p.terms()) {
    auto& row = rows[t.dx];
    if (static_cast<int>(row.size()) <= t.dy) row.resize(static_cast<std::size_t>(t.dy) + 1, 0);
    row[static_cast<std::size_t>(t.dy)] = t.c;
  }
  return rows;
}

void sub_scaled(std::vector<int128>& acc, const std::vector<int128>& d,
                const std::vector<int128>& c) {
  // acc -= d * c (polynomial product over the y variable)
  if (d.empty() || c.empty()) return;
  std::size_t need = d.size() + c.size() - 1;
  if (acc.size() < need) acc.resize(need, 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] == 0) continue;
    for (std::size_t j = 0; j < c.size(); ++j) {
      acc[i + j] = checked_sub(acc[i + j], checked_mul(d[i], c[j]));
    }
  }
}

void trim(std::vector<int128>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

SeriesTable expand(const RationalBgf& gf, int n_max) {
  if (n_max < 0) throw std::invalid_argument("expand: negative n_max");
  if (n_max > 64) throw std::invalid_argument("expand: n_max above 64");
  Poly2 num = gf.signed_numerator();
  Poly2 den = gf.denominator();
  int128 c0 = den.at_origin();
  if (c0 == 0) throw std::domain_error("expand: denominator constant term is zero");
  if (c0 != 1 && c0 != -1)
    throw std::domain_error("expand: denominator constant term must be +-1");
  if (c0 == -1) {
    num = -num;
    den = -den;
  }
  // den now has constant term +1; the x^0 coefficient must be exactly that
  // constant (a y-dependent unit would need rational division)
  auto den_rows = x_rows(den);
  if (den_rows.count(0) && den_rows[0].size() > 1)
    throw std::domain_error("expand: denominator x^0 coefficient depends on y");
  auto num_rows = x_rows(num);
  int max_den_x = den.max_x_degree();

  SeriesTable out(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    std::vector<int128> row;
    if (auto it = num_rows.find(n); it != num_rows.end()) row = it->second;
    for (int j = 1; j <= std::min(max_den_x, n); ++j) {
      auto it = den_rows.find(j);
      if (it == den_rows.end()) continue;
      sub_scaled(row, it->second, out[static_cast<std::size_t>(n - j)]);
    }
    trim(row);
    out[static_cast<std::size_t>(n)] = std::move(row);
  }
  return out;
}

std::vector<int128> row_sums(const SeriesTable& table) {
  std::vector<int128> sums;
  sums.reserve(table.size());
  for (const auto& row : table) {
    int128 s = 0;
    for (int128 c : row) s = checked_add(s, c);
    sums.push_back(s);
  }
  return sums;
}

RationalBgf specialize_y1(const RationalBgf& gf) {
  RationalBgf r;
  r.numerator = gf.numerator.substitute_y1();
  r.leading_minus = gf.leading_minus;
  for (const Poly2& f : gf.denominator_factors) r.denominator_factors.push_back(f.substitute_y1());
  if (r.denominator().at_origin() == 0)
    throw std::domain_error("specialize_y1: denominator vanishes at the origin");
  return r;
}

bool same_function(const RationalBgf& a, const RationalBgf& b) {
  return a.signed_numerator() * b.denominator() == b.signed_numerator() * a.denominator();
}

}  // namespace catwords
