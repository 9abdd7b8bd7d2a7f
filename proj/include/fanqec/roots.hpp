#pragma once

// Certified zeros of S_n, U^e_n and phi_n.
//
// Every zero is located inside a bracket whose endpoints are exact rationals
// and whose endpoint signs are evaluated exactly; bisection proceeds on exact
// rational midpoints. Irrational bracket ends cos(k pi / m) are replaced by
// rational outer bounds whose signs are checked against the values the fan
// graph theory predicts.

#include <string>
#include <vector>

#include "fanqec/polycore.hpp"

namespace fanqec {

inline constexpr double kDefaultRootTol = 1e-12;

struct Bracket {
  Rat lo;
  Rat hi;
  int sign_lo = 0;
  int sign_hi = 0;

  Rat width() const { return hi - lo; }
};

// Computes the endpoint signs of p exactly; throws BadBracket unless
// lo < hi and the signs are nonzero and opposite.
Bracket make_bracket(const Poly& p, const Rat& lo, const Rat& hi);

struct ZeroCert {
  double value = 0.0;
  // Width zero (lo == hi) when the zero is an exact rational.
  Bracket bracket;
  // Set when the zero is known to be simple: it sits in one of the
  // unique-zero brackets and the bracket count matched the degree.
  bool simple = false;

  bool exact() const { return bracket.lo == bracket.hi; }
};

// Narrows b to width <= tol by exact-sign bisection. A midpoint at which p
// vanishes, or the simplest rational inside the final bracket when p vanishes
// there, yields a width-zero certificate.
ZeroCert bisect(const Poly& p, const Bracket& b, double tol = kDefaultRootTol);

// Rational outer bound of cos(k pi / m): the double value moved by 2^-40 in
// direction `dir` (+1 up, -1 down).
Rat cos_pi_bound(int k, int m, int dir, int nudge_exp = 40);

// Minimal zero of U^e_n (n >= 2), closed form checked against an exact sign
// change of U^e_n around it. Throws Undefined for n <= 1.
double beta(int n);

// Minimal zero of S_n (n >= 1).
ZeroCert gamma(int n, double tol = kDefaultRootTol);

// Minimal zero of phi_n (n >= 0), selected from beta/gamma by parity.
double alpha(int n, double tol = kDefaultRootTol);

// Every zero of S_n in ascending order: one per interlacing bracket plus x = 1.
std::vector<ZeroCert> zeros_of_s(int n, double tol = kDefaultRootTol);

// Interlacing grid xi_0 = 1 > xi_1 > ... > xi_last = -1 for S_n, as doubles.
std::vector<double> s_interlacing_grid(int n);

// (1 - x)/(1 + x) <= cos(pi x) on a uniform grid of [0, 1/3]: equality at
// both ends within 1e-12, strict in the interior.
bool check_elementary_inequality(int grid);

struct StructureCheck {
  std::string check;
  int n = 0;
  bool pass = false;
  std::string detail;
};

// Zero-structure checks for 0 <= n <= max_n: interlacing and simplicity of
// the zeros of S_n, the beta/gamma comparison and interleaving orderings, the
// strict decrease of alpha_n, and the elementary inequality. Sorted by
// (check, n). `threads` = 0 picks the hardware count.
std::vector<StructureCheck> root_structure_checks(int max_n, double tol = kDefaultRootTol,
                                                  unsigned threads = 0);

}  // namespace fanqec
