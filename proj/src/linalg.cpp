#include "hheat/linalg.hpp"

#include <cmath>
#include <stdexcept>

namespace hheat {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix matmul(const Matrix& x, const Matrix& y) {
  if (x.n != y.n) throw std::invalid_argument("matmul: size mismatch");
  const std::size_t n = x.n;
  Matrix z(n);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const double xik = x(i, k);
      if (xik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) z(i, j) += xik * y(k, j);
    }
  }
  return z;
}

void solve_inplace(Matrix a, Matrix& b) {
  if (a.n != b.n) throw std::invalid_argument("solve_inplace: size mismatch");
  const std::size_t n = a.n;
  std::vector<std::size_t> piv(n);
  for (std::size_t i = 0; i < n; ++i) piv[i] = i;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    double mag = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > mag) {
        mag = std::abs(a(r, col));
        best = r;
      }
    }
    if (mag == 0.0) throw std::runtime_error("solve_inplace: singular matrix");
    if (best != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a.a[col * n + j], a.a[best * n + j]);
      for (std::size_t j = 0; j < n; ++j) std::swap(b.a[col * n + j], b.a[best * n + j]);
    }
    const double inv = 1.0 / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) * inv;
      if (f == 0.0) continue;
      a(r, col) = 0.0;
      for (std::size_t j = col + 1; j < n; ++j) a(r, j) -= f * a(col, j);
      for (std::size_t j = 0; j < n; ++j) b(r, j) -= f * b(col, j);
    }
  }
  for (std::size_t col = n; col-- > 0;) {
    const double inv = 1.0 / a(col, col);
    for (std::size_t j = 0; j < n; ++j) b(col, j) *= inv;
    for (std::size_t r = 0; r < col; ++r) {
      const double f = a(r, col);
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) b(r, j) -= f * b(col, j);
    }
  }
}

double orthogonality_defect(const Matrix& x) {
  const std::size_t n = x.n;
  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < n; ++k) s += x(k, i) * x(k, j);
      if (i == j) s -= 1.0;
      defect = std::max(defect, std::abs(s));
    }
  }
  return defect;
}

Matrix expm_pade(const Matrix& a) {
  const std::size_t n = a.n;
  double norm = 0.0;  // infinity norm
  for (std::size_t i = 0; i < n; ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += std::abs(a(i, j));
    norm = std::max(norm, row);
  }

  int squarings = 0;
  double scale = 1.0;
  while (norm * scale > 0.5) {
    scale *= 0.5;
    ++squarings;
  }

  Matrix x = a;
  for (auto& v : x.a) v *= scale;

  // diagonal Pade of order 6 on the scaled matrix
  constexpr int kOrder = 6;
  Matrix term = x;
  Matrix num = Matrix::identity(n);
  Matrix den = Matrix::identity(n);
  double coef = 0.5;
  for (std::size_t i = 0; i < n * n; ++i) {
    num.a[i] += coef * term.a[i];
    den.a[i] -= coef * term.a[i];
  }
  for (int k = 2; k <= kOrder; ++k) {
    coef = coef * (kOrder - k + 1) / (k * (2.0 * kOrder - k + 1));
    term = matmul(x, term);
    const double sgn = (k % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < n * n; ++i) {
      num.a[i] += coef * term.a[i];
      den.a[i] += sgn * coef * term.a[i];
    }
  }
  solve_inplace(den, num);
  for (int s = 0; s < squarings; ++s) num = matmul(num, num);
  return num;
}

}  // namespace hheat
