#pragma once

// Exact integers, rationals and dense univariate integer polynomials.
//
// Integers and rationals are GMP values (mpz_class / mpq_class). Polynomials
// keep their coefficients in ascending degree order and are always
// normalized: the last stored coefficient is nonzero, and the zero polynomial
// has no coefficients at all.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fanqec {

using BigInt = mpz_class;
using Rat = mpq_class;

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigInt> coeffs);
  Poly(std::initializer_list<long> coeffs);

  static Poly constant(const BigInt& c);
  // c * x^k
  static Poly monomial(const BigInt& c, std::size_t k);
  static Poly x() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  // Coefficient of x^k; zero beyond the degree.
  BigInt coeff(std::size_t k) const;
  // Requires a nonzero polynomial.
  const BigInt& leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const BigInt& c);

  friend bool operator==(const Poly& a, const Poly& b) = default;

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
// Quotient of an exact division over the integers; throws NotDivisible when
// b does not divide a (or b is zero).
Poly poly_divexact(const Poly& a, const Poly& b);

Rat poly_eval_rat(const Poly& p, const Rat& x);
// Sign of p(x) in {-1, 0, +1}, computed without forming the rational value.
int poly_sign_at(const Poly& p, const Rat& x);
double poly_eval_f64(const Poly& p, double x);

inline Poly operator+(Poly a, const Poly& b) { return a += b; }
inline Poly operator-(Poly a, const Poly& b) { return a -= b; }
inline Poly operator*(const Poly& a, const Poly& b) { return poly_mul(a, b); }
inline Poly operator*(Poly a, const BigInt& c) { return a *= c; }
inline Poly operator*(const BigInt& c, Poly a) { return a *= c; }

// Canonical text form: ascending coefficients, e.g. "[-1, 0, 4]" for 4x^2-1.
std::string to_text(const Poly& p);
// Same list without spaces, valid JSON: "[-1,0,4]".
std::string to_json_array(const Poly& p);

// Exact conversion of a finite double to a rational.
Rat rat_from_double(double v);

// The rational with the smallest denominator (then smallest magnitude
// numerator) in the closed interval [lo, hi]. Requires lo <= hi.
Rat simplest_rational_between(const Rat& lo, const Rat& hi);

}  // namespace fanqec
