#include "catwords/formulas.hpp"

#include <stdexcept>

namespace catwords {

namespace {

int128 pow2(int e) {
  if (e < 0) throw std::domain_error("pow2: negative exponent");
  if (e > 126) throw overflow_error("pow2 overflow");
  return int128(1) << e;
}

}  // namespace

int128 fibonacci(int n) {
  if (n < 0) throw std::domain_error("fibonacci: negative index");
  int128 a = 1, b = 1;  // F(0), F(1)
  for (int i = 0; i < n; ++i) {
    int128 next = checked_add(a, b);
    a = b;
    b = next;
  }
  return a;
}

int128 pell_number(int n) {
  if (n < 0) throw std::domain_error("pell: negative index");
  int128 a = 0, b = 1;  // p(0), p(1)
  for (int i = 0; i < n; ++i) {
    int128 next = checked_add(checked_mul(int128(2), b), a);
    a = b;
    b = next;
  }
  return a;
}

int128 binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    r = checked_mul(r, int128(n - k + i));
    r /= i;  // exact at every step
  }
  return r;
}

int formula_valid_from(FormulaId id) {
  switch (id) {
    case FormulaId::ZeroFromN: return 3;
    case FormulaId::One: return 0;
    case FormulaId::Identity_n: return 1;
    case FormulaId::TwoNMinusTwo: return 2;
    case FormulaId::PowTwo: return 1;
    case FormulaId::NMinus1Pow2Plus1: return 2;
    case FormulaId::PowTwoMinusN: return 0;
    case FormulaId::NPlus2Pow2: return 3;
    case FormulaId::ThreePowTwoFamily: return 1;
    case FormulaId::Binom3PlusN: return 3;
    case FormulaId::Binom2Plus1: return 2;
    case FormulaId::Fib: return 0;
    case FormulaId::FibPlus1Minus1: return 1;
    case FormulaId::FibEven: return 1;
    case FormulaId::Pell: return 1;
    case FormulaId::UltConst3: return 3;
    case FormulaId::UltConstZero: return 5;
    case FormulaId::CatalanNumber: return 0;
  }
  throw std::logic_error("unknown formula id");
}

std::string formula_text(FormulaId id) {
  switch (id) {
    case FormulaId::ZeroFromN: return "0";
    case FormulaId::One: return "1";
    case FormulaId::Identity_n: return "n";
    case FormulaId::TwoNMinusTwo: return "2(n-1)";
    case FormulaId::PowTwo: return "2^(n-1)";
    case FormulaId::NMinus1Pow2Plus1: return "(n-1)*2^(n-2)+1";
    case FormulaId::PowTwoMinusN: return "2^n-n";
    case FormulaId::NPlus2Pow2: return "(n+2)*2^(n-3)";
    case FormulaId::ThreePowTwoFamily: return "3*2^(n-1)-(n+1)(n+2)/2+n";
    case FormulaId::Binom3PlusN: return "C(n,3)+n";
    case FormulaId::Binom2Plus1: return "C(n,2)+1";
    case FormulaId::Fib: return "F(n)";
    case FormulaId::FibPlus1Minus1: return "F(n+1)-1";
    case FormulaId::FibEven: return "F(2n-2)";
    case FormulaId::Pell: return "pell(n)";
    case FormulaId::UltConst3: return "3";
    case FormulaId::UltConstZero: return "0";
    case FormulaId::CatalanNumber: return "catalan(n)";
  }
  throw std::logic_error("unknown formula id");
}

int128 eval_formula(FormulaId id, int n) {
  if (n < formula_valid_from(id))
    throw std::domain_error("formula '" + formula_text(id) + "' not valid at n=" +
                            std::to_string(n));
  switch (id) {
    case FormulaId::ZeroFromN: return 0;
    case FormulaId::One: return 1;
    case FormulaId::Identity_n: return n;
    case FormulaId::TwoNMinusTwo: return checked_mul(int128(2), int128(n - 1));
    case FormulaId::PowTwo: return pow2(n - 1);
    case FormulaId::NMinus1Pow2Plus1:
      return checked_add(checked_mul(int128(n - 1), pow2(n - 2)), int128(1));
    case FormulaId::PowTwoMinusN: return checked_sub(pow2(n), int128(n));
    case FormulaId::NPlus2Pow2: return checked_mul(int128(n + 2), pow2(n - 3));
    case FormulaId::ThreePowTwoFamily: {
      int128 v = checked_mul(int128(3), pow2(n - 1));
      v = checked_sub(v, int128(n + 1) * int128(n + 2) / 2);
      return checked_add(v, int128(n));
    }
    case FormulaId::Binom3PlusN: return checked_add(binomial(n, 3), int128(n));
    case FormulaId::Binom2Plus1: return checked_add(binomial(n, 2), int128(1));
    case FormulaId::Fib: return fibonacci(n);
    case FormulaId::FibPlus1Minus1: return checked_sub(fibonacci(n + 1), int128(1));
    case FormulaId::FibEven: return fibonacci(2 * n - 2);
    case FormulaId::Pell: return pell_number(n);
    case FormulaId::UltConst3: return 3;
    case FormulaId::UltConstZero: return 0;
    case FormulaId::CatalanNumber: {
      int128 c = 1;
      for (int k = 0; k < n; ++k) {
        c = checked_mul(c, int128(2) * (2 * k + 1));
        c /= (k + 2);
      }
      return c;
    }
  }
  throw std::logic_error("unknown formula id");
}

}  // namespace catwords
