#include "fanqec/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "fanqec/chebyshev.hpp"
#include "fanqec/error.hpp"
#include "parallel.hpp"

namespace fanqec {

namespace {

constexpr int kNudgeExp = 40;
constexpr int kMaxNudgeExp = 20;

int alternating(int k) { return k % 2 == 0 ? 1 : -1; }

Rat pow2(int e) {
  Rat r = 1;
  if (e >= 0) {
    mpz_mul_2exp(r.get_num_mpz_t(), r.get_num_mpz_t(), e);
  } else {
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), -e);
  }
  return r;
}

// Rational bound of cos(k pi / m) at which p has the expected sign. The nudge
// starts at 2^-40 in direction dir and doubles up to 2^-20.
Rat verified_cos_bound(const Poly& p, int k, int m, int dir, int expected_sign) {
  for (int e = kNudgeExp; e >= kMaxNudgeExp; --e) {
    Rat r = cos_pi_bound(k, m, dir, e);
    if (poly_sign_at(p, r) == expected_sign) return r;
  }
  throw BadBracket("sign at cos(" + std::to_string(k) + "pi/" + std::to_string(m) +
                   ") differs from the predicted sign " + std::to_string(expected_sign));
}

// -1 + eps with eps = 2^-40, halved until p carries the sign it has at -1.
Rat verified_lower_end(const Poly& p) {
  const int at_minus_one = poly_sign_at(p, Rat(-1));
  if (at_minus_one == 0) throw BadBracket("polynomial vanishes at -1");
  for (int e = kNudgeExp; e <= 4 * kNudgeExp; ++e) {
    Rat r = Rat(-1) + pow2(-e);
    if (poly_sign_at(p, r) == at_minus_one) return r;
  }
  return Rat(-1);
}

// Disjoint sign-change brackets of S_n in ascending order, one per
// interlacing interval. The grid points are xi_k = cos((2k-1) pi / M) with
// predicted signs (-1)^k, closed below by -1 with sign (-1)^(N+1).
std::vector<Bracket> interlacing_brackets(const Poly& s, int n) {
  const int m = n / 2;
  const int count = n % 2 == 0 ? m : m + 1;
  const int denom = n % 2 == 0 ? 2 * m + 1 : 2 * m + 2;

  const int expected_at_minus_one = alternating(count + 1);
  const Rat low = verified_lower_end(s);
  if (poly_sign_at(s, low) != expected_at_minus_one) {
    throw BadBracket("sign of S_" + std::to_string(n) + " near -1 differs from the prediction");
  }

  // points[k] for k = 1..count, then the lower end.
  std::vector<Rat> points;
  std::vector<int> signs;
  for (int k = 1; k <= count; ++k) {
    points.push_back(verified_cos_bound(s, 2 * k - 1, denom, +1, alternating(k)));
    signs.push_back(alternating(k));
  }
  points.push_back(low);
  signs.push_back(expected_at_minus_one);

  if (count > 0 && points.front() >= 1) throw BadBracket("grid point does not lie below 1");

  std::vector<Bracket> out;
  for (int k = count - 1; k >= 0; --k) {
    Bracket b{points[k + 1], points[k], signs[k + 1], signs[k]};
    if (b.lo >= b.hi) throw BadBracket("grid points out of order");
    out.push_back(std::move(b));
  }
  return out;
}

// Certifies that S_n has exactly one simple zero in each interlacing bracket
// and a simple zero at 1.
std::vector<Bracket> certified_brackets(const Poly& s, int n) {
  if (poly_sign_at(s, Rat(1)) != 0) {
    throw BadBracket("S_" + std::to_string(n) + "(1) is not zero");
  }
  auto brackets = interlacing_brackets(s, n);
  if (static_cast<int>(brackets.size()) + 1 != s.degree()) {
    throw BadBracket("bracket count does not account for every zero of S_" + std::to_string(n));
  }
  return brackets;
}

ZeroCert exact_zero(const Rat& r, bool simple) {
  ZeroCert z;
  z.value = r.get_d();
  z.bracket = Bracket{r, r, 0, 0};
  z.simple = simple;
  return z;
}

}  // namespace

Bracket make_bracket(const Poly& p, const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw BadBracket("bracket requires lo < hi");
  Bracket b{lo, hi, poly_sign_at(p, lo), poly_sign_at(p, hi)};
  if (b.sign_lo == 0 || b.sign_hi == 0) throw BadBracket("polynomial vanishes at a bracket endpoint");
  if (b.sign_lo == b.sign_hi) throw BadBracket("bracket endpoints carry the same sign");
  return b;
}

ZeroCert bisect(const Poly& p, const Bracket& b, double tol) {
  if (!(tol > 0)) throw InvalidArgument("bisect: tol must be positive");
  Bracket cur = make_bracket(p, b.lo, b.hi);
  const Rat width_limit = rat_from_double(tol);

  while (cur.width() > width_limit) {
    Rat mid = (cur.lo + cur.hi) / 2;
    mid.canonicalize();
    const int s = poly_sign_at(p, mid);
    if (s == 0) return exact_zero(mid, false);
    if (s == cur.sign_lo) {
      cur.lo = std::move(mid);
    } else {
      cur.hi = std::move(mid);
    }
  }

  const Rat simplest = simplest_rational_between(cur.lo, cur.hi);
  if (poly_sign_at(p, simplest) == 0) return exact_zero(simplest, false);

  ZeroCert z;
  Rat mid = (cur.lo + cur.hi) / 2;
  z.value = mid.get_d();
  z.bracket = std::move(cur);
  return z;
}

Rat cos_pi_bound(int k, int m, int dir, int nudge_exp) {
  if (m <= 0) throw InvalidArgument("cos_pi_bound: denominator must be positive");
  const double c = std::cos(static_cast<double>(k) * std::numbers::pi / m);
  return rat_from_double(c) + dir * pow2(-nudge_exp);
}

double beta(int n) {
  if (n <= 1) throw Undefined("beta_n is undefined for n <= 1: U^e_n has no zero");
  const int m = n / 2;
  const int k = 2 * m;
  const int denom = n % 2 == 0 ? 2 * m + 1 : 2 * m + 2;
  const Poly ue = partial_e(n);

  for (int e = kNudgeExp; e >= kMaxNudgeExp; --e) {
    const Rat lo = cos_pi_bound(k, denom, -1, e);
    const Rat hi = cos_pi_bound(k, denom, +1, e);
    const int s_lo = poly_sign_at(ue, lo);
    const int s_hi = poly_sign_at(ue, hi);
    if (s_lo == 0 || s_hi == 0 || s_lo == s_hi) continue;
    // Nothing of U^e_n lies below: same sign at -1 as just under beta.
    if (poly_sign_at(ue, Rat(-1)) != s_lo) {
      throw BadBracket("U^e_" + std::to_string(n) + " changes sign below its closed-form minimal zero");
    }
    const Rat simplest = simplest_rational_between(lo, hi);
    if (poly_sign_at(ue, simplest) == 0) return simplest.get_d();
    return std::cos(static_cast<double>(k) * std::numbers::pi / denom);
  }
  throw BadBracket("no sign change of U^e_" + std::to_string(n) + " around its closed-form zero");
}

ZeroCert gamma(int n, double tol) {
  if (n < 1) throw InvalidArgument("gamma: n must be >= 1");
  const Poly s = s_poly(n);
  const auto brackets = certified_brackets(s, n);
  Bracket lowest = brackets.front();

  if (n % 2 == 0 && n >= 2) {
    // Tighten the lower end to just below beta_n = cos(2m pi / (2m+1)); the
    // sign there must still match the one near -1.
    const int m = n / 2;
    lowest.lo = verified_cos_bound(s, 2 * m, 2 * m + 1, -1, lowest.sign_lo);
    if (!(lowest.lo < lowest.hi)) throw BadBracket("empty bracket above beta_n");
  }

  ZeroCert z = bisect(s, lowest, tol);
  z.simple = true;
  return z;
}

double alpha(int n, double tol) {
  if (n < 0) throw InvalidArgument("alpha: n must be >= 0");
  if (n == 0) return 1.0;
  if (n == 1) return gamma(1, tol).value;
  if (n % 2 == 0) return beta(n);
  return gamma(n, tol).value;
}

std::vector<ZeroCert> zeros_of_s(int n, double tol) {
  if (n < 0) throw InvalidArgument("zeros_of_s: n must be >= 0");
  const Poly s = s_poly(n);
  const auto brackets = certified_brackets(s, n);
  std::vector<ZeroCert> out;
  out.reserve(brackets.size() + 1);
  for (const auto& b : brackets) {
    ZeroCert z = bisect(s, b, tol);
    z.simple = true;
    out.push_back(std::move(z));
  }
  out.push_back(exact_zero(Rat(1), true));
  return out;
}

std::vector<double> s_interlacing_grid(int n) {
  if (n < 0) throw InvalidArgument("s_interlacing_grid: n must be >= 0");
  const int m = n / 2;
  const int count = n % 2 == 0 ? m : m + 1;
  const int denom = n % 2 == 0 ? 2 * m + 1 : 2 * m + 2;
  std::vector<double> grid{1.0};
  for (int k = 1; k <= count; ++k) {
    grid.push_back(std::cos((2.0 * k - 1.0) * std::numbers::pi / denom));
  }
  grid.push_back(-1.0);
  return grid;
}

bool check_elementary_inequality(int grid) {
  if (grid < 2) throw InvalidArgument("check_elementary_inequality: grid must be >= 2");
  constexpr double kEndpointTol = 1e-12;
  for (int i = 0; i <= grid; ++i) {
    const double x = static_cast<double>(i) / (3.0 * grid);
    const double lhs = (1.0 - x) / (1.0 + x);
    const double rhs = std::cos(std::numbers::pi * x);
    if (i == 0 || i == grid) {
      if (std::abs(lhs - rhs) > kEndpointTol) return false;
    } else if (!(lhs < rhs)) {
      return false;
    }
  }
  return true;
}

std::vector<StructureCheck> root_structure_checks(int max_n, double tol, unsigned threads) {
  if (max_n < 0) throw InvalidArgument("root_structure_checks: max_n must be >= 0");
  std::vector<StructureCheck> out;
  auto add = [&](std::string check, int n, bool pass, std::string detail = {}) {
    out.push_back({std::move(check), n, pass, std::move(detail)});
  };

  // Per-n work: full zero localization plus gamma_n through its own bracket.
  std::vector<StructureCheck> interlace(max_n + 1);
  std::vector<std::optional<double>> gam(max_n + 1);
  detail::parallel_for(0, max_n + 1, [&](int n) {
    StructureCheck c{"zeros of S[n] simple and interlaced", n, false, {}};
    try {
      const auto zeros = zeros_of_s(n, tol);
      const auto grid = s_interlacing_grid(n);
      const int deg = s_poly(n).degree();
      const int inner = static_cast<int>(zeros.size()) - 1;
      bool ok = static_cast<int>(zeros.size()) == deg && zeros.back().exact() && zeros.back().value == 1.0;
      for (int i = 0; ok && i < inner; ++i) {
        const double upper = grid[inner - i];
        const double lower = grid[inner + 1 - i];
        ok = zeros[i].simple && lower < zeros[i].value && zeros[i].value < upper;
      }
      c.pass = ok;
      if (!ok) c.detail = "zero count or placement does not match the interlacing grid";
    } catch (const Error& e) {
      c.detail = e.what();
    }
    interlace[n] = std::move(c);
    if (n >= 1) {
      try {
        gam[n] = gamma(n, tol).value;
      } catch (const Error&) {
      }
    }
  }, threads);
  for (auto& c : interlace) out.push_back(std::move(c));

  auto cos_pi = [](int k, int m) { return std::cos(static_cast<double>(k) * std::numbers::pi / m); };

  if (max_n >= 2) {
    add("beta[2] = gamma[2] = -1/2", 2, gam[2] && *gam[2] == -0.5 && beta(2) == -0.5);
  }
  for (int n = 3; n <= max_n; ++n) {
    const int m = n / 2;
    if (!gam[n]) {
      add(n % 2 == 0 ? "beta < gamma < xi (even n)" : "-1 < gamma < xi < beta (odd n)", n, false,
          "gamma unavailable");
      continue;
    }
    const double g = *gam[n];
    if (n % 2 == 0) {
      add("beta < gamma < xi (even n)", n, beta(n) < g && g < cos_pi(2 * m - 1, 2 * m + 1));
    } else {
      const double xi = cos_pi(2 * m + 1, 2 * m + 2);
      add("-1 < gamma < xi < beta (odd n)", n, -1.0 < g && g < xi && xi < beta(n));
      add("beta[n+1] < gamma[n] < beta[n-1] (odd n)", n, beta(n + 1) < g && g < beta(n - 1));
    }
  }

  // alpha: 1 = alpha_0 > alpha_1 = alpha_2 = -1/2 > alpha_3 > ... > -1
  auto alpha_at = [&](int n) -> std::optional<double> {
    if (n == 0) return 1.0;
    if (n % 2 == 0) return beta(n);
    return gam[n];
  };
  for (int n = 1; n <= max_n; ++n) {
    const auto prev = alpha_at(n - 1);
    const auto cur = alpha_at(n);
    bool ok = prev && cur && *cur > -1.0;
    if (ok) ok = n == 2 ? *cur == *prev && *cur == -0.5 : *cur < *prev;
    add("alpha[n] strictly decreasing", n, ok);
  }

  add("elementary inequality (1-x)/(1+x) <= cos(pi x)", 0, check_elementary_inequality(1000));

  std::stable_sort(out.begin(), out.end(), [](const StructureCheck& a, const StructureCheck& b) {
    return a.check != b.check ? a.check < b.check : a.n < b.n;
  });
  return out;
}

}  // namespace fanqec
