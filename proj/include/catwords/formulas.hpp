#pragma once

#include <string>

#include "catwords/checked_int.hpp"

namespace catwords {

// Closed-form counting families. Each maps to exactly one closed form; the
// evaluator refuses arguments below the form's validity threshold instead
// of extrapolating (registry rows carry literal initial values for the
// small cases).
enum class FormulaId {
  ZeroFromN,         // 0, from n = 3
  One,               // 1
  Identity_n,        // n, from n = 1
  TwoNMinusTwo,      // 2(n-1), from n = 2
  PowTwo,            // 2^(n-1), from n = 1
  NMinus1Pow2Plus1,  // (n-1)*2^(n-2) + 1, from n = 2
  PowTwoMinusN,      // 2^n - n
  NPlus2Pow2,        // (n+2)*2^(n-3), from n = 3
  ThreePowTwoFamily, // 3*2^(n-1) - (n+1)(n+2)/2 + n, from n = 1
  Binom3PlusN,       // C(n,3) + n, from n = 3
  Binom2Plus1,       // C(n,2) + 1, from n = 2
  Fib,               // F(n) with F(0) = F(1) = 1
  FibPlus1Minus1,    // F(n+1) - 1, from n = 1
  FibEven,           // F(2n-2), from n = 1
  Pell,              // p(n) with p(0) = 0, p(1) = 1, p(n) = 2p(n-1)+p(n-2)
  UltConst3,         // 3, from n = 3
  UltConstZero,      // 0, from n = 5
  CatalanNumber,     // C(2n,n)/(n+1)
};

int formula_valid_from(FormulaId id);
std::string formula_text(FormulaId id);

// Exact value; throws std::domain_error below the validity threshold and
// overflow_error when the value exceeds 128 bits.
int128 eval_formula(FormulaId id, int n);

int128 fibonacci(int n);    // F(0) = F(1) = 1
int128 pell_number(int n);  // p(0) = 0, p(1) = 1
int128 binomial(int n, int k);

}  // namespace catwords
