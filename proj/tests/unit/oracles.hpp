#pragma once

// Floating-point reference formulas used as independent oracles. None of
// these touch the recurrence-based constructors.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "fanqec/polycore.hpp"

namespace oracle {

inline constexpr double pi = std::numbers::pi;

// sin((n+1)t)/sin t
inline double u_trig(int n, double t) { return std::sin((n + 1) * t) / std::sin(t); }

inline double ue_trig(int n, double t) {
  if (n % 2 == 0) return std::sin((n + 1) * t / 2) / std::sin(t / 2);
  return std::sin((n + 1) * t / 2) / std::sin(t);
}

inline double uo_trig(int n, double t) {
  if (n % 2 == 0) return std::cos((n + 1) * t / 2) / std::cos(t / 2);
  return 2 * std::cos((n + 1) * t / 2);
}

// prod over k in [1, n] with k % 2 == parity of 2(x - cos(k pi / (n+1)))
inline double parity_product(int n, int parity, double x) {
  double p = 1.0;
  for (int k = 1; k <= n; ++k) {
    if (k % 2 == parity) p *= 2 * (x - std::cos(k * pi / (n + 1)));
  }
  return p;
}

// p evaluated exactly at the double x, rounded once.
inline double exact_at(const fanqec::Poly& p, double x) {
  return fanqec::poly_eval_rat(p, fanqec::rat_from_double(x)).get_d();
}

inline fanqec::Rat q(long a, long b) {
  fanqec::Rat r(a, b);
  r.canonicalize();
  return r;
}

inline fanqec::Poly random_poly(std::mt19937& rng, int max_deg = 8, int bound = 9) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  std::uniform_int_distribution<int> coef(-bound, bound);
  std::vector<fanqec::BigInt> c(deg(rng) + 1);
  for (auto& v : c) v = coef(rng);
  return fanqec::Poly(std::move(c));
}

}  // namespace oracle
