#pragma once

#include <cstddef>
#include <vector>

namespace fanqec {

// Dense symmetric matrix, row-major. Writes through set() keep both
// triangles equal.
class SymMatrix {
 public:
  explicit SymMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0.0) {}

  int size() const { return n_; }
  double operator()(int i, int j) const { return a_[idx(i, j)]; }
  void set(int i, int j, double v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  double trace() const;
  double frobenius_norm() const;
  // sqrt of the sum of squared off-diagonal entries (both triangles).
  double off_diagonal_norm() const;

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * n_ + j; }

  int n_;
  std::vector<double> a_;
};

struct EigenResult {
  // Descending.
  std::vector<double> values;
  // Off-diagonal Frobenius norm of the final rotated matrix.
  double off_norm = 0.0;
  int sweeps = 0;
  bool converged = false;
};

// Cyclic Jacobi rotations with threshold sweeps, in fixed row-major (p, q)
// order. Stops once off_norm <= rel_tol * ||A||_F.
EigenResult jacobi_eigenvalues(SymMatrix a, double rel_tol = 1e-12, int max_sweeps = 100);

}  // namespace fanqec
