#include "hheat/coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hheat {

HermiteCoeffs::HermiteCoeffs(int d, int N)
    : dim(d), degree(N), c(static_cast<std::size_t>(index_count(d, N)), cdouble{0.0, 0.0}) {}

double HermiteCoeffs::max_imag() const {
  double m = 0.0;
  for (const auto& z : c) m = std::max(m, std::abs(z.imag()));
  return m;
}

HermiteCoeffs HermiteCoeffs::zero(int d, int N) { return HermiteCoeffs(d, N); }

HermiteCoeffs HermiteCoeffs::basis_vector(int d, int N, const MultiIndex& k) {
  HermiteCoeffs out(d, N);
  const auto indices = enumerate_indices(d, N);
  const auto it = std::find(indices.begin(), indices.end(), k);
  if (it == indices.end())
    throw std::invalid_argument("basis_vector: multi-index outside truncation");
  out.c[static_cast<std::size_t>(it - indices.begin())] = 1.0;
  out.real_valued = true;
  return out;
}

void require_same_shape(const HermiteCoeffs& a, const HermiteCoeffs& b, const char* where) {
  if (a.dim != b.dim || a.degree != b.degree || a.c.size() != b.c.size())
    throw std::invalid_argument(std::string(where) + ": coefficient shapes differ");
}

HermiteCoeffs& HermiteCoeffs::operator+=(const HermiteCoeffs& other) {
  require_same_shape(*this, other, "operator+=");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += other.c[i];
  shell_touched = shell_touched || other.shell_touched;
  real_valued = real_valued && other.real_valued;
  return *this;
}

HermiteCoeffs& HermiteCoeffs::operator-=(const HermiteCoeffs& other) {
  require_same_shape(*this, other, "operator-=");
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= other.c[i];
  shell_touched = shell_touched || other.shell_touched;
  real_valued = real_valued && other.real_valued;
  return *this;
}

HermiteCoeffs& HermiteCoeffs::operator*=(cdouble s) {
  for (auto& z : c) z *= s;
  return *this;
}

HermiteCoeffs operator+(HermiteCoeffs a, const HermiteCoeffs& b) { return a += b; }
HermiteCoeffs operator-(HermiteCoeffs a, const HermiteCoeffs& b) { return a -= b; }
HermiteCoeffs operator*(cdouble s, HermiteCoeffs a) { return a *= s; }

double l2_norm(const HermiteCoeffs& a) {
  double s = 0.0;
  for (const auto& z : a.c) s += std::norm(z);
  return std::sqrt(s);
}

double max_abs_diff(const HermiteCoeffs& a, const HermiteCoeffs& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.c.size(); ++i) m = std::max(m, std::abs(a.c[i] - b.c[i]));
  return m;
}

}  // namespace hheat
