#pragma once

// Quadratic embedding constant (QEC) of graphs, with three independent routes
// for fan graphs K_1 + P_n:
//   * closed form for even n,
//   * -2 alpha_n - 2 from the certified minimal zero of phi_n,
//   * a numeric oracle that maximizes <f, D f> over unit f orthogonal to the
//     all-ones vector by compressing D onto that hyperplane and taking the top
//     eigenvalue.

#include <functional>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "fanqec/graphs.hpp"
#include "fanqec/polycore.hpp"
#include "fanqec/roots.hpp"
#include "fanqec/symmetric_eigen.hpp"

namespace fanqec {

enum class QecMethod { ClosedFormEven, RootBased, NumericOracle, KnownSmall };

// What the caller asks for; Auto resolves to KnownSmall / ClosedFormEven /
// RootBased depending on n.
enum class QecRequest { Auto, ClosedForm, RootBased, Numeric };

std::string_view method_name(QecMethod m);
std::optional<QecRequest> parse_request(std::string_view name);

// value = -4 sin^2(angle), angle = pi / (2(n+1)).
struct ClosedFormCert {
  int n = 0;
  double angle = 0.0;
};

struct EigenCert {
  int dim = 0;
  double off_norm = 0.0;
  int sweeps = 0;
};

using QecCertificate = std::variant<std::monostate, ClosedFormCert, ZeroCert, EigenCert>;

struct QecResult {
  double value = 0.0;
  QecMethod method = QecMethod::NumericOracle;
  QecCertificate certificate;
};

// Orthonormal basis of {f : <1, f> = 0} in R^n as an n x (n-1) row-major
// matrix. Column k-1 (k = 1..n-1) has k entries 1/sqrt(k(k+1)), then
// -k/sqrt(k(k+1)), then zeros.
std::vector<double> helmert_basis(int n);

// Q^T D Q for the Helmert basis Q.
SymMatrix compress_to_sum_zero(const DistMatrix& d);

QecResult qec_numeric(const Graph& g, double tol = 1e-12);

QecResult qec_fan(int n, QecRequest request = QecRequest::Auto, double tol = kDefaultRootTol);

// -4 sin^2(pi / (2(n+1)))
double fan_even_closed_form(int n);

// Strict bounds for odd n = 2m+1 >= 3:
// (-4 sin^2(pi/(2(2m+2))), -4 sin^2(pi/(2(2m+3)))).
std::pair<double, double> fan_odd_bounds(int n);

// Smallest even-index path eigenvalue below -1 (n >= 3); absent for n = 3, 5.
std::optional<double> tau(int n);

// 2 gamma_n (n >= 3), with its position among the path eigenvalues checked.
// Throws OrderingViolation if the expected strict ordering fails.
double sigma(int n, double tol = kDefaultRootTol);

// |<1, (A_n - alpha I)^{-1} 1> - closed form in U_n(alpha/2), U_{n-1}(alpha/2)|.
// The left side is a direct linear solve, the right side exact rational
// evaluation. Throws NearSingular when alpha is within 1e-6 of an eigenvalue
// of A_n or of +-2.
double key_identity_check(int n, const Rat& alpha);

struct CrossValidationRow {
  int n = 0;
  double fan = 0.0;
  double numeric = 0.0;
  // -min{sigma_n, tau_n} - 2
  double decomposition = 0.0;
  bool pass = false;
};

struct CrossValidationReport {
  double tol = 0.0;
  std::vector<CrossValidationRow> rows;

  bool all_passed() const;
  int failure_count() const;
};

// For 3 <= n <= n_max compares qec_fan against the numeric oracle and the
// sigma/tau decomposition. `fan_value` replaces qec_fan (negative controls).
CrossValidationReport cross_validate(int n_max, double tol,
                                     const std::function<double(int)>& fan_value = {});

}  // namespace fanqec
