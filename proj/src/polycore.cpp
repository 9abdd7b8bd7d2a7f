#include "fanqec/polycore.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fanqec/error.hpp"

namespace fanqec {

Poly::Poly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Poly::Poly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

Poly Poly::constant(const BigInt& c) { return Poly(std::vector<BigInt>{c}); }

Poly Poly::monomial(const BigInt& c, std::size_t k) {
  std::vector<BigInt> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

BigInt Poly::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

const BigInt& Poly::leading() const {
  if (coeffs_.empty()) throw InvalidArgument("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

void Poly::normalize() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const BigInt& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

Poly poly_add(const Poly& a, const Poly& b) { return a + b; }

Poly poly_sub(const Poly& a, const Poly& b) { return a - b; }

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  auto ca = a.coeffs();
  auto cb = b.coeffs();
  std::vector<BigInt> r(ca.size() + cb.size() - 1);
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (sgn(ca[i]) == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), ca[i].get_mpz_t(), cb[j].get_mpz_t());
    }
  }
  return Poly(std::move(r));
}

Poly poly_divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) throw NotDivisible("dividend degree below divisor degree");

  std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
  auto cb = b.coeffs();
  const int db = b.degree();
  const BigInt& lead = b.leading();
  std::vector<BigInt> q(a.degree() - db + 1);

  for (int k = a.degree() - db; k >= 0; --k) {
    BigInt& top = rem[k + db];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw NotDivisible("leading coefficient does not divide exactly");
    }
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), cb[j].get_mpz_t());
    }
  }
  for (int i = 0; i < db; ++i) {
    if (sgn(rem[i]) != 0) throw NotDivisible("nonzero remainder");
  }
  return Poly(std::move(q));
}

namespace {

// Homogeneous Horner: returns sum_i c_i num^i den^(d-i) for x = num/den.
BigInt homogeneous_numerator(const Poly& p, const Rat& x) {
  auto c = p.coeffs();
  const BigInt& num = x.get_num();
  const BigInt& den = x.get_den();
  BigInt acc = c.back();
  BigInt dpow = 1;
  for (int i = p.degree() - 1; i >= 0; --i) {
    dpow *= den;
    acc *= num;
    mpz_addmul(acc.get_mpz_t(), c[i].get_mpz_t(), dpow.get_mpz_t());
  }
  return acc;
}

}  // namespace

Rat poly_eval_rat(const Poly& p, const Rat& x) {
  if (p.is_zero()) return 0;
  BigInt den_pow;
  mpz_pow_ui(den_pow.get_mpz_t(), x.get_den().get_mpz_t(), p.degree());
  Rat r(homogeneous_numerator(p, x), den_pow);
  r.canonicalize();
  return r;
}

int poly_sign_at(const Poly& p, const Rat& x) {
  if (p.is_zero()) return 0;
  return sgn(homogeneous_numerator(p, x));
}

double poly_eval_f64(const Poly& p, double x) {
  double acc = 0.0;
  auto c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

std::string to_text(const Poly& p) {
  std::string s = "[";
  bool first = true;
  for (const auto& c : p.coeffs()) {
    if (!first) s += ", ";
    s += c.get_str();
    first = false;
  }
  return s + "]";
}

std::string to_json_array(const Poly& p) {
  std::string s = "[";
  bool first = true;
  for (const auto& c : p.coeffs()) {
    if (!first) s += ",";
    s += c.get_str();
    first = false;
  }
  return s + "]";
}

Rat rat_from_double(double v) {
  if (!std::isfinite(v)) throw InvalidArgument("cannot convert a non-finite double to a rational");
  return Rat(v);
}

Rat simplest_rational_between(const Rat& lo, const Rat& hi) {
  if (lo > hi) throw InvalidArgument("simplest_rational_between: empty interval");
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return 0;
  if (sgn(hi) < 0) return -simplest_rational_between(-hi, -lo);

  BigInt fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  if (Rat(fl) == lo) return lo;
  if (Rat(fl + 1) <= hi) return Rat(fl + 1);
  // lo and hi share the integer part; recurse on the reciprocal fractional parts.
  Rat inner = simplest_rational_between(1 / (hi - fl), 1 / (lo - fl));
  Rat r = fl + 1 / inner;
  r.canonicalize();
  return r;
}

}  // namespace fanqec
