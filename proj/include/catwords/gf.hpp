#pragma once

#include <string>
#include <vector>

#include "catwords/poly.hpp"

namespace catwords {

// A rational bivariate generating function N(x,y)/D(x,y) with integer
// polynomial numerator and denominator. The denominator is kept factored
// for display; expansion works on the expanded product. A leading minus
// ("-(N)/(D)") is stored separately so displayed forms can keep their
// published shape.
struct RationalBgf {
  Poly2 numerator;
  std::vector<Poly2> denominator_factors;
  bool leading_minus = false;

  Poly2 denominator() const;
  Poly2 signed_numerator() const;  // numerator with the leading minus applied
  std::string text() const;  // "(N) / ((f1)*(f2))" with explicit exponents

  bool operator==(const RationalBgf&) const = default;
};

// rows[n][k] = coefficient of x^n y^k, exact. Expansion runs the linear
// recurrence induced by the denominator on coefficient rows; it requires
// the denominator's constant term to be +-1 (all registered functions are
// sign-normalized to +1 internally) and refuses n_max > 64.
using SeriesTable = std::vector<std::vector<int128>>;

SeriesTable expand(const RationalBgf& gf, int n_max);

std::vector<int128> row_sums(const SeriesTable& table);

// y := 1. The result is a univariate rational function; expanding it gives
// the row sums of the bivariate expansion.
RationalBgf specialize_y1(const RationalBgf& gf);

// Exact rational-function equality via cross multiplication.
bool same_function(const RationalBgf& a, const RationalBgf& b);

}  // namespace catwords
