#pragma once

#include <cstddef>
#include <vector>

namespace hheat {

/// Row-major dense real matrix; just enough linear algebra for the truncated
/// translation operators (sizes are C(N+d,d), desk scale).
struct Matrix {
  std::size_t n = 0;  // square
  std::vector<double> a;

  Matrix() = default;
  explicit Matrix(std::size_t n_) : n(n_), a(n_ * n_, 0.0) {}
  double& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }

  static Matrix identity(std::size_t n);
};

Matrix matmul(const Matrix& x, const Matrix& y);

/// Solves A X = B in place of B (partial-pivot LU). Throws on singular A.
void solve_inplace(Matrix a, Matrix& b);

/// max-norm of (X^T X - I); orthogonality defect witness.
double orthogonality_defect(const Matrix& x);

/// Matrix exponential by Pade approximation with scaling and squaring; the
/// scaled norm is brought below 1/2 before the rational approximant is formed.
Matrix expm_pade(const Matrix& a);

}  // namespace hheat
