#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "catwords/checked_int.hpp"

namespace catwords {

// Exact bivariate polynomial over the integers, sparse representation.
// Terms are kept sorted by (x-degree, y-degree) with no zero coefficients,
// so equality is structural. All coefficient arithmetic is overflow checked
// 128-bit; a polynomial that would exceed that range throws instead of
// rounding or wrapping.
class Poly2 {
 public:
  struct Term {
    int dx = 0;
    int dy = 0;
    int128 c = 0;

    bool operator==(const Term&) const = default;
  };

  Poly2() = default;  // zero polynomial
  Poly2(std::initializer_list<Term> terms);

  static Poly2 constant(long long c) { return Poly2({{0, 0, c}}); }
  static Poly2 monomial(long long c, int dx, int dy) { return Poly2({{dx, dy, c}}); }

  bool is_zero() const { return terms_.empty(); }
  int max_x_degree() const;
  int max_y_degree() const;
  int128 coefficient(int dx, int dy) const;
  int128 at_origin() const { return coefficient(0, 0); }
  bool has_y() const { return max_y_degree() > 0; }

  Poly2 operator+(const Poly2& other) const;
  Poly2 operator-(const Poly2& other) const;
  Poly2 operator*(const Poly2& other) const;
  Poly2 operator-() const;
  bool operator==(const Poly2&) const = default;

  Poly2 substitute_y1() const;  // y := 1, collapses to a polynomial in x

  const std::vector<Term>& terms() const { return terms_; }

  // "x^4*y - x^4 + 2*x^3 - 2*x + 1": terms by descending x-degree, then
  // descending y-degree.
  std::string text() const;

 private:
  void normalize();

  std::vector<Term> terms_;
};

}  // namespace catwords
