#include "fanqec/symmetric_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace fanqec {

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix::off_diagonal_norm() const {
  double s = 0.0;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) s += (*this)(i, j) * (*this)(i, j);
  }
  return std::sqrt(2.0 * s);
}

EigenResult jacobi_eigenvalues(SymMatrix a, double rel_tol, int max_sweeps) {
  const int n = a.size();
  EigenResult r;
  const double target = rel_tol * a.frobenius_norm();

  for (r.sweeps = 0; r.sweeps < max_sweeps; ++r.sweeps) {
    r.off_norm = a.off_diagonal_norm();
    if (r.off_norm <= target) {
      r.converged = true;
      break;
    }
    // Early sweeps skip small entries; later ones rotate everything.
    double thresh = 0.0;
    if (r.sweeps < 3) {
      double sum = 0.0;
      for (int p = 0; p < n; ++p) {
        for (int q = p + 1; q < n; ++q) sum += std::abs(a(p, q));
      }
      thresh = 0.2 * sum / (static_cast<double>(n) * n);
    }

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        const double g = 100.0 * std::abs(apq);
        const double app = a(p, p);
        const double aqq = a(q, q);
        if (r.sweeps > 3 && std::abs(app) + g == std::abs(app) && std::abs(aqq) + g == std::abs(aqq)) {
          a.set(p, q, 0.0);
          continue;
        }
        if (std::abs(apq) <= thresh || apq == 0.0) continue;

        const double theta = (aqq - app) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a.set(k, p, c * akp - s * akq);
          a.set(k, q, s * akp + c * akq);
        }
        a.set(p, p, app - t * apq);
        a.set(q, q, aqq + t * apq);
        a.set(p, q, 0.0);
      }
    }
  }
  if (!r.converged) {
    r.off_norm = a.off_diagonal_norm();
    r.converged = r.off_norm <= target;
  }

  r.values.resize(n);
  for (int i = 0; i < n; ++i) r.values[i] = a(i, i);
  std::sort(r.values.begin(), r.values.end(), std::greater<>());
  return r;
}

}  // namespace fanqec
