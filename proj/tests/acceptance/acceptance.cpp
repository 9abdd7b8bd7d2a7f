// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fanqec/chebyshev.hpp"
#include "fanqec/cli.hpp"
#include "fanqec/error.hpp"
#include "fanqec/graphs.hpp"
#include "fanqec/qec.hpp"
#include "fanqec/roots.hpp"
#include "oracles.hpp"

using namespace fanqec;
using oracle::pi;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

double sin2(double a) { return std::sin(a) * std::sin(a); }

Outcome identity_battery() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream out, err;
  const int code = run_cli({"fanqec", "verify", "--max-n", "300", "--threads", "1"}, out, err);
  const double secs = seconds_since(t0);
  if (code != 0) o.fail("verify exited " + std::to_string(code) + ": " + err.str());
  if (secs >= 60.0) o.fail(fmt("took %.1f s", secs));

  // The identities themselves, counted directly.
  const IdentityReport r = identity_suite(300, family, 1);
  if (!r.all_passed()) o.fail(r.failures().front().identity + " failed");
  if (r.checked.size() != 301 * identity_names().size()) o.fail("unexpected check count");
  if (o.pass) {
    o.detail = std::to_string(r.checked.size()) + " exact checks over " + std::to_string(identity_names().size()) +
               " identities, verify took " + fmt("%.1f s single-threaded", secs);
  }
  return o;
}

Outcome known_values() {
  Outcome o;
  for (int n : {1, 2}) {
    const QecResult r = qec_fan(n);
    if (r.value != -1.0 || r.method != QecMethod::KnownSmall) o.fail("qec_fan(" + std::to_string(n) + ") != -1");
    const double num = qec_numeric(fan(n)).value;
    if (std::abs(num + 1.0) > 1e-9) o.fail("numeric oracle off for n=" + std::to_string(n));
  }
  const double v3 = qec_fan(3).value;
  if (std::abs(v3 + 0.5) > 1e-10) o.fail(fmt("qec_fan(3) = %.17g", v3));
  if (o.pass) o.detail = "K_1+P_1 = K_1+P_2 = -1 (known_small, oracle within 1e-9), K_1+P_3 = " + format_double(v3);
  return o;
}

Outcome even_closed_form() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n = 2; n <= 60; n += 2) {
    const double closed = -4 * sin2(pi / (2 * (n + 1)));
    const double err = std::abs(qec_numeric(fan(n)).value - closed);
    worst = std::max(worst, err);
    if (err > 1e-8) o.fail("n=" + std::to_string(n) + fmt(" differs by %.3g", err));
  }
  const double secs = seconds_since(t0);
  if (secs >= 120.0) o.fail(fmt("took %.1f s", secs));
  if (o.pass) o.detail = "even n <= 60, worst |oracle - closed form| = " + fmt("%.3g", worst) + fmt(" in %.2f s", secs);
  return o;
}

Outcome odd_bounds() {
  Outcome o;
  double tightest = 1.0;
  for (int n = 3; n <= 201; n += 2) {
    const int m = (n - 1) / 2;
    const double lo = -4 * sin2(pi / (2 * (2 * m + 2)));
    const double hi = -4 * sin2(pi / (2 * (2 * m + 3)));
    const QecResult r = qec_fan(n, QecRequest::RootBased);
    if (!(lo < r.value && r.value < hi)) o.fail("n=" + std::to_string(n) + " outside its bounds");
    tightest = std::min({tightest, r.value - lo, hi - r.value});
  }
  if (o.pass) o.detail = "odd 3 <= n <= 201 strictly inside, smallest margin " + fmt("%.3g", tightest);
  return o;
}

Outcome monotone() {
  Outcome o;
  std::vector<double> v(201);
  for (int n = 3; n <= 200; ++n) {
    v[n] = qec_fan(n).value;
    if (!(v[n] < 0.0)) o.fail("qec_fan(" + std::to_string(n) + ") not negative");
  }
  if (v[3] != -0.5) o.fail("qec_fan(3) != -1/2");
  for (int n = 3; n < 200; ++n) {
    if (!(v[n] < v[n + 1])) o.fail("not increasing at n=" + std::to_string(n));
  }
  if (!(v[200] > v[199])) o.fail("qec_fan(200) <= qec_fan(199)");
  if (o.pass) {
    o.detail = "strictly increasing on 3..200, qec_fan(199) = " + format_double(v[199]) +
               ", qec_fan(200) = " + format_double(v[200]);
  }
  return o;
}

Outcome root_structure() {
  Outcome o;
  int zeros = 0;
  for (int n = 0; n <= 120; ++n) {
    const Poly s = s_poly(n);
    const auto zs = zeros_of_s(n);
    if (static_cast<int>(zs.size()) != s.degree()) o.fail("zero count at n=" + std::to_string(n));
    const int big_m = n + 1;  // 2m+1 for n = 2m, 2m+2 for n = 2m+1
    const int count = static_cast<int>(zs.size()) - 1;
    // Interlacing: zero i (ascending) sits in (xi_{count-i+1}, xi_{count-i}), with xi_0 = 1, xi_{count+1} = -1.
    auto xi = [&](int k) {
      if (k == 0) return 1.0;
      if (k == count + 1) return -1.0;
      return std::cos((2 * k - 1) * pi / big_m);
    };
    for (int i = 0; i < count; ++i) {
      const ZeroCert& z = zs[i];
      const double lo = xi(count - i + 1);
      const double hi = xi(count - i);
      if (!(lo < z.value && z.value < hi)) o.fail("interlacing at n=" + std::to_string(n));
      if (!z.simple) o.fail("not simple at n=" + std::to_string(n));
      if (z.exact()) {
        if (poly_eval_rat(s, z.bracket.lo) != 0) o.fail("exact zero is not a zero at n=" + std::to_string(n));
      } else if (poly_sign_at(s, z.bracket.lo) * poly_sign_at(s, z.bracket.hi) != -1) {
        o.fail("bracket is not a sign change at n=" + std::to_string(n));
      }
      ++zeros;
    }
    if (!zs.back().exact() || zs.back().value != 1.0) o.fail("x = 1 missing at n=" + std::to_string(n));
  }

  // beta/gamma comparison and interleaving, against closed-form cosines.
  auto cosq = [](int k, int m) { return std::cos(k * pi / m); };
  int orderings = 0;
  for (int n = 2; n <= 120; ++n) {
    const int m = n / 2;
    const double g = gamma(n).value;
    if (n == 2) {
      if (g != -0.5 || beta(2) != -0.5) o.fail("beta_2 = gamma_2 = -1/2 fails");
      continue;
    }
    if (n % 2 == 0) {
      const double b = cosq(2 * m, 2 * m + 1);
      if (!(b < g && g < cosq(2 * m - 1, 2 * m + 1))) o.fail("comparison fails at n=" + std::to_string(n));
    } else {
      const double xi = cosq(2 * m + 1, 2 * m + 2);
      if (!(-1.0 < g && g < xi && xi < cosq(2 * m, 2 * m + 2))) o.fail("comparison fails at n=" + std::to_string(n));
      if (!(cosq(2 * m + 2, 2 * m + 3) < g && g < cosq(2 * m, 2 * m + 1))) {
        o.fail("interleaving fails at n=" + std::to_string(n));
      }
      ++orderings;
    }
    ++orderings;
  }

  for (const auto& c : root_structure_checks(120)) {
    if (!c.pass) o.fail(c.check + " at n=" + std::to_string(c.n));
  }
  if (o.pass) {
    o.detail = std::to_string(zeros) + " certified zeros of S_n (n <= 120) interlaced and simple, " +
               std::to_string(orderings) + " beta/gamma orderings hold";
  }
  return o;
}

Outcome key_identity_and_eigenvectors() {
  Outcome o;
  std::mt19937 rng(20241016);
  std::uniform_int_distribution<int> n_dist(1, 60);
  std::uniform_int_distribution<int> num_dist(201, 1000);
  std::uniform_int_distribution<int> side(0, 1);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const int n = n_dist(rng);
    const int num = num_dist(rng);
    const Rat a = oracle::q(side(rng) ? num : -num, 100);
    try {
      const double res = key_identity_check(n, a);
      worst = std::max(worst, res);
      if (res > 1e-9) o.fail("residual " + fmt("%.3g", res) + " at n=" + std::to_string(n) + ", alpha=" + a.get_str());
    } catch (const Error& e) {
      o.fail(e.what());
    }
  }
  for (int n = 1; n <= 60; ++n) {
    for (int k = 1; k <= n; ++k) {
      double sum = 0.0;
      for (double v : path_eigenvector(n, k)) sum += v;
      const bool zero = std::abs(sum) <= 1e-9;
      if (zero != (k % 2 == 0)) o.fail("<1, g> pattern broken at n=" + std::to_string(n) + ", k=" + std::to_string(k));
    }
  }
  if (o.pass) {
    o.detail = "50 samples, worst residual " + fmt("%.3g", worst) + "; <1,g> = 0 exactly for even k, n <= 60";
  }
  return o;
}

Outcome oracle_consistency() {
  Outcome o;
  double worst = 0.0;
  for (int n = 3; n <= 60; ++n) {
    const double err = std::abs(qec_numeric(fan(n)).value - qec_fan(n).value);
    worst = std::max(worst, err);
    if (err > 1e-8) o.fail("oracle differs at n=" + std::to_string(n));
    double smallest = sigma(n);
    const auto t = tau(n);
    if ((n == 3 || n == 5) == t.has_value()) o.fail("tau presence wrong at n=" + std::to_string(n));
    if (t) smallest = std::min(smallest, *t);
    const double dec = -smallest - 2.0;
    worst = std::max(worst, std::abs(dec - qec_fan(n).value));
    if (std::abs(dec - qec_fan(n).value) > 1e-8) o.fail("decomposition differs at n=" + std::to_string(n));
  }
  const auto report = cross_validate(60, 1e-8);
  if (!report.all_passed()) o.fail(std::to_string(report.failure_count()) + " cross-validation rows failed");
  if (o.pass) o.detail = "3 <= n <= 60, worst disagreement " + fmt("%.3g", worst);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"exact identity battery (verify --max-n 300)", identity_battery},
      {"known values QEC(K_1+P_1), QEC(K_1+P_2), QEC(K_1+P_3)", known_values},
      {"even closed form vs numeric oracle", even_closed_form},
      {"odd-n bounds", odd_bounds},
      {"monotone convergence", monotone},
      {"root structure and beta/gamma orderings", root_structure},
      {"key-identity residuals and eigenvector orthogonality", key_identity_and_eigenvectors},
      {"oracle self-consistency and sigma/tau decomposition", oracle_consistency},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    if (!o.pass) ++failures;
    std::printf("%s criterion %d: %s -- %s\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
