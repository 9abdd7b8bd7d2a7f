#include "fanqec/qec.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fanqec/chebyshev.hpp"
#include "fanqec/error.hpp"
#include "parallel.hpp"

namespace fanqec {

std::string_view method_name(QecMethod m) {
  switch (m) {
    case QecMethod::ClosedFormEven: return "closed_form_even";
    case QecMethod::RootBased: return "root_based";
    case QecMethod::NumericOracle: return "numeric_oracle";
    case QecMethod::KnownSmall: return "known_small";
  }
  return "?";
}

std::optional<QecRequest> parse_request(std::string_view name) {
  if (name == "auto") return QecRequest::Auto;
  if (name == "closed") return QecRequest::ClosedForm;
  if (name == "root") return QecRequest::RootBased;
  if (name == "numeric") return QecRequest::Numeric;
  return std::nullopt;
}

std::vector<double> helmert_basis(int n) {
  if (n < 2) throw InvalidArgument("helmert_basis: n must be >= 2");
  const int cols = n - 1;
  std::vector<double> q(static_cast<std::size_t>(n) * cols, 0.0);
  for (int k = 1; k <= cols; ++k) {
    const double norm = std::sqrt(static_cast<double>(k) * (k + 1));
    for (int i = 0; i < k; ++i) q[static_cast<std::size_t>(i) * cols + (k - 1)] = 1.0 / norm;
    q[static_cast<std::size_t>(k) * cols + (k - 1)] = -k / norm;
  }
  return q;
}

SymMatrix compress_to_sum_zero(const DistMatrix& d) {
  const int n = d.size();
  const int cols = n - 1;
  const auto q = helmert_basis(n);

  // dq = D Q  (n x cols)
  std::vector<double> dq(static_cast<std::size_t>(n) * cols, 0.0);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const double dik = d(i, k);
      if (dik == 0.0) continue;
      for (int j = 0; j < cols; ++j) dq[static_cast<std::size_t>(i) * cols + j] += dik * q[static_cast<std::size_t>(k) * cols + j];
    }
  }
  SymMatrix m(cols);
  for (int a = 0; a < cols; ++a) {
    for (int b = a; b < cols; ++b) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) {
        s += q[static_cast<std::size_t>(i) * cols + a] * dq[static_cast<std::size_t>(i) * cols + b];
      }
      m.set(a, b, s);
    }
  }
  return m;
}

QecResult qec_numeric(const Graph& g, double tol) {
  if (g.n_vertices() < 2) throw InvalidArgument("qec_numeric: graph needs at least two vertices");
  const DistMatrix d = distance_matrix(g);
  const SymMatrix m = compress_to_sum_zero(d);
  const EigenResult eig = jacobi_eigenvalues(m, tol);
  QecResult r;
  r.value = eig.values.front();
  r.method = QecMethod::NumericOracle;
  r.certificate = EigenCert{m.size(), eig.off_norm, eig.sweeps};
  return r;
}

double fan_even_closed_form(int n) {
  const double s = std::sin(std::numbers::pi / (2.0 * (n + 1)));
  return -4.0 * s * s;
}

std::pair<double, double> fan_odd_bounds(int n) {
  if (n < 3 || n % 2 == 0) throw InvalidArgument("fan_odd_bounds: n must be odd and >= 3");
  const int m = (n - 1) / 2;
  const double lo = std::sin(std::numbers::pi / (2.0 * (2 * m + 2)));
  const double hi = std::sin(std::numbers::pi / (2.0 * (2 * m + 3)));
  return {-4.0 * lo * lo, -4.0 * hi * hi};
}

QecResult qec_fan(int n, QecRequest request, double tol) {
  if (n < 1) throw InvalidArgument("qec_fan: n must be >= 1");
  if (request == QecRequest::Auto) {
    if (n <= 2) return QecResult{-1.0, QecMethod::KnownSmall, std::monostate{}};
    request = n % 2 == 0 ? QecRequest::ClosedForm : QecRequest::RootBased;
  }

  switch (request) {
    case QecRequest::ClosedForm: {
      if (n % 2 != 0) throw InvalidArgument("closed form exists only for even n");
      return QecResult{fan_even_closed_form(n), QecMethod::ClosedFormEven,
                       ClosedFormCert{n, std::numbers::pi / (2.0 * (n + 1))}};
    }
    case QecRequest::RootBased: {
      if (n % 2 == 0) return QecResult{-2.0 * beta(n) - 2.0, QecMethod::RootBased, std::monostate{}};
      ZeroCert z = gamma(n, tol);
      const double value = -2.0 * z.value - 2.0;
      return QecResult{value, QecMethod::RootBased, std::move(z)};
    }
    case QecRequest::Numeric: return qec_numeric(fan(n));
    case QecRequest::Auto: break;
  }
  throw InvalidArgument("unhandled QEC request");
}

std::optional<double> tau(int n) {
  if (n < 3) throw InvalidArgument("tau: n must be >= 3");
  if (n == 3 || n == 5) return std::nullopt;
  const int m = n / 2;
  const int denom = n % 2 == 0 ? 2 * m + 1 : 2 * m + 2;
  return 2.0 * std::cos(2.0 * m * std::numbers::pi / denom);
}

double sigma(int n, double tol) {
  if (n < 3) throw InvalidArgument("sigma: n must be >= 3");
  const double s = 2.0 * gamma(n, tol).value;
  const PathSpectrum spec = path_spectrum(n);
  const double lowest = spec.omega(n);
  const double next = spec.omega(n - 1);
  if (n % 2 == 1) {
    if (!(s < lowest && lowest < next)) {
      throw OrderingViolation("sigma_" + std::to_string(n) + " is not below the smallest path eigenvalue");
    }
  } else if (!(lowest < s && s < next)) {
    throw OrderingViolation("sigma_" + std::to_string(n) + " is not between the two smallest path eigenvalues");
  }
  return s;
}

namespace {

// Dense Gaussian elimination with partial pivoting; a is n x n row-major.
std::vector<double> solve_dense(std::vector<double> a, std::vector<double> b) {
  const int n = static_cast<int>(b.size());
  auto at = [&](int i, int j) -> double& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(at(r, col)) > std::abs(at(piv, col))) piv = r;
    }
    if (at(piv, col) == 0.0) throw NearSingular("singular linear system");
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(at(piv, j), at(col, j));
      std::swap(b[piv], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = at(r, col) / at(col, col);
      if (f == 0.0) continue;
      for (int j = col; j < n; ++j) at(r, j) -= f * at(col, j);
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[i];
    for (int j = i + 1; j < n; ++j) s -= at(i, j) * x[j];
    x[i] = s / at(i, i);
  }
  return x;
}

}  // namespace

double key_identity_check(int n, const Rat& alpha) {
  if (n < 1) throw InvalidArgument("key_identity_check: n must be >= 1");
  constexpr double kMargin = 1e-6;
  const double a = alpha.get_d();
  if (std::abs(a - 2.0) < kMargin || std::abs(a + 2.0) < kMargin) {
    throw NearSingular("alpha is within 1e-6 of +-2");
  }
  for (double w : path_spectrum(n).eigenvalues) {
    if (std::abs(a - w) < kMargin) throw NearSingular("alpha is within 1e-6 of an eigenvalue of A_n");
  }

  std::vector<double> m = path_adjacency(n);
  for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] -= a;
  const auto g = solve_dense(std::move(m), std::vector<double>(n, 1.0));
  double lhs = 0.0;
  for (double v : g) lhs += v;

  const Rat un = poly_eval_rat(compress(cheb_u(n)), alpha);
  const Rat un1 = poly_eval_rat(compress(cheb_u(n - 1)), alpha);
  const Rat two_minus = 2 - alpha;
  Rat rhs = (n * two_minus + 2 - 2 * (un1 + 1) / un) / (two_minus * two_minus);
  rhs.canonicalize();
  return std::abs(lhs - rhs.get_d());
}

bool CrossValidationReport::all_passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const CrossValidationRow& r) { return r.pass; });
}

int CrossValidationReport::failure_count() const {
  return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const CrossValidationRow& r) { return !r.pass; }));
}

CrossValidationReport cross_validate(int n_max, double tol, const std::function<double(int)>& fan_value) {
  if (n_max < 3) throw InvalidArgument("cross_validate: n_max must be >= 3");
  CrossValidationReport report;
  report.tol = tol;
  report.rows.resize(n_max - 2);

  detail::parallel_for(3, n_max + 1, [&](int n) {
    CrossValidationRow row;
    row.n = n;
    row.fan = row.numeric = row.decomposition = std::numeric_limits<double>::quiet_NaN();
    try {
      row.fan = fan_value ? fan_value(n) : qec_fan(n).value;
      row.numeric = qec_numeric(fan(n)).value;
      double smallest = sigma(n);
      if (auto t = tau(n)) smallest = std::min(smallest, *t);
      row.decomposition = -smallest - 2.0;
      row.pass = std::abs(row.fan - row.numeric) <= tol && std::abs(row.decomposition - row.fan) <= tol;
    } catch (const Error&) {
      row.pass = false;
    }
    report.rows[n - 3] = row;
  });
  return report;
}

}  // namespace fanqec
