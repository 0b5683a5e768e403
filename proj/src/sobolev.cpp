#include "hheat/sobolev.hpp"

#include <cmath>
#include <stdexcept>

#include "hheat/hermite.hpp"

namespace hheat {

namespace {

void check_axis(const HermiteCoeffs& phi, int axis, const char* where) {
  if (axis < 0 || axis >= phi.dim)
    throw std::invalid_argument(std::string(where) + ": axis out of range");
}

// content degree: largest |k| carrying a nonzero coefficient
int content_degree(const HermiteCoeffs& phi, const Basis& basis) {
  int deg = 0;
  for (std::size_t i = 0; i < phi.c.size(); ++i)
    if (phi.c[i] != cdouble{0.0, 0.0}) deg = std::max(deg, basis.shell(i));
  return deg;
}

}  // namespace

double sobolev_norm(const HermiteCoeffs& phi, double p) {
  if (!std::isfinite(p)) throw std::invalid_argument("sobolev_norm: order must be finite");
  const Basis basis(phi.dim, phi.degree);
  double s = 0.0;
  for (std::size_t i = 0; i < phi.c.size(); ++i)
    s += std::pow(basis.eigenvalue(i), 2.0 * p) * std::norm(phi.c[i]);
  return std::sqrt(s);
}

cdouble sobolev_inner(const HermiteCoeffs& phi, const HermiteCoeffs& psi, double p) {
  require_same_shape(phi, psi, "sobolev_inner");
  const Basis basis(phi.dim, phi.degree);
  cdouble s{0.0, 0.0};
  for (std::size_t i = 0; i < phi.c.size(); ++i)
    s += std::pow(basis.eigenvalue(i), 2.0 * p) * phi.c[i] * std::conj(psi.c[i]);
  return s;
}

HermiteCoeffs apply_Hp(const HermiteCoeffs& phi, double p) {
  const Basis basis(phi.dim, phi.degree);
  HermiteCoeffs out = phi;
  for (std::size_t i = 0; i < out.c.size(); ++i)
    out.c[i] *= std::pow(basis.eigenvalue(i), p);
  return out;
}

HermiteCoeffs apply_complex_power(const HermiteCoeffs& phi, cdouble z) {
  const Basis basis(phi.dim, phi.degree);
  HermiteCoeffs out = phi;
  out.real_valued = false;
  for (std::size_t i = 0; i < out.c.size(); ++i)
    out.c[i] *= std::exp(z * std::log(basis.eigenvalue(i)));
  return out;
}

HermiteCoeffs apply_raise(const HermiteCoeffs& phi, int axis) {
  check_axis(phi, axis, "apply_raise");
  const Basis basis(phi.dim, phi.degree);
  HermiteCoeffs out(phi.dim, phi.degree);
  out.real_valued = phi.real_valued;
  out.shell_touched = phi.shell_touched;
  for (std::size_t i = 0; i < phi.c.size(); ++i) {
    if (phi.c[i] == cdouble{0.0, 0.0}) continue;
    const int up = basis.up(i, axis);
    if (up >= 0)
      out.c[up] += basis.raise_weight(i, axis) * phi.c[i];
    else
      out.shell_touched = true;  // outflow past |k| = N dropped
  }
  return out;
}

HermiteCoeffs apply_lower(const HermiteCoeffs& phi, int axis) {
  check_axis(phi, axis, "apply_lower");
  const Basis basis(phi.dim, phi.degree);
  HermiteCoeffs out(phi.dim, phi.degree);
  out.real_valued = phi.real_valued;
  out.shell_touched = phi.shell_touched;
  for (std::size_t i = 0; i < phi.c.size(); ++i) {
    const int dn = basis.down(i, axis);
    if (dn >= 0) out.c[dn] += basis.lower_weight(i, axis) * phi.c[i];
  }
  return out;
}

HermiteCoeffs apply_derivative(const HermiteCoeffs& phi, int axis) {
  check_axis(phi, axis, "apply_derivative");
  const Basis basis(phi.dim, phi.degree);
  HermiteCoeffs out(phi.dim, phi.degree);
  out.real_valued = phi.real_valued;
  out.shell_touched = phi.shell_touched;
  apply_derivative_inplace(basis, phi.c, out.c, axis, &out.shell_touched);
  return out;
}

void apply_derivative_inplace(const Basis& basis, std::span<const cdouble> in,
                              std::span<cdouble> out, int axis, bool* shell_touched) {
  for (auto& z : out) z = cdouble{0.0, 0.0};
  for (std::size_t i = 0; i < in.size(); ++i) {
    if (in[i] == cdouble{0.0, 0.0}) continue;
    // d_j = (A_j - A_j^+)/2: sqrt(k_j/2) down, -sqrt((k_j+1)/2) up
    const int dn = basis.down(i, axis);
    if (dn >= 0) out[dn] += 0.5 * basis.lower_weight(i, axis) * in[i];
    const int up = basis.up(i, axis);
    if (up >= 0)
      out[up] -= 0.5 * basis.raise_weight(i, axis) * in[i];
    else if (shell_touched != nullptr)
      *shell_touched = true;
  }
}

HermiteCoeffs apply_position(const HermiteCoeffs& phi, int axis) {
  check_axis(phi, axis, "apply_position");
  const Basis basis(phi.dim, phi.degree);
  HermiteCoeffs out(phi.dim, phi.degree);
  out.real_valued = phi.real_valued;
  out.shell_touched = phi.shell_touched;
  for (std::size_t i = 0; i < phi.c.size(); ++i) {
    if (phi.c[i] == cdouble{0.0, 0.0}) continue;
    const int dn = basis.down(i, axis);
    if (dn >= 0) out.c[dn] += 0.5 * basis.lower_weight(i, axis) * phi.c[i];
    const int up = basis.up(i, axis);
    if (up >= 0)
      out.c[up] += 0.5 * basis.raise_weight(i, axis) * phi.c[i];
    else
      out.shell_touched = true;
  }
  return out;
}

HermiteCoeffs apply_laplacian(const HermiteCoeffs& phi) {
  HermiteCoeffs out(phi.dim, phi.degree);
  out.real_valued = phi.real_valued;
  for (int j = 0; j < phi.dim; ++j) out += apply_derivative(apply_derivative(phi, j), j);
  return out;
}

HermiteCoeffs fourier(const HermiteCoeffs& phi, FourierDirection dir) {
  const Basis basis(phi.dim, phi.degree);
  HermiteCoeffs out = phi;
  out.real_valued = false;
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    // multiply by (-i)^{|k|} (forward) or i^{|k|} (inverse) by exact
    // component swaps, so the map is unitary to the last bit
    int r = basis.shell(i) & 3;
    if (dir == FourierDirection::Inverse) r = (4 - r) & 3;
    const cdouble z = out.c[i];
    switch (r) {
      case 0: break;
      case 1: out.c[i] = cdouble{z.imag(), -z.real()}; break;  // * -i
      case 2: out.c[i] = -z; break;
      case 3: out.c[i] = cdouble{-z.imag(), z.real()}; break;  // * +i
    }
  }
  return out;
}

HermiteCoeffs delta_coeffs(std::span<const double> x, int d, int N) {
  if (static_cast<int>(x.size()) != d)
    throw std::invalid_argument("delta_coeffs: point dimension mismatch");
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument("delta_coeffs: point must be finite");
  const auto indices = enumerate_indices(d, N);
  std::vector<std::vector<double>> tables(d);
  for (int j = 0; j < d; ++j) tables[j] = hermite_all_1d(N, x[j]);
  HermiteCoeffs out(d, N);
  out.real_valued = true;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    double h = 1.0;
    for (int j = 0; j < d; ++j) h *= tables[j][indices[i][j]];
    out.c[i] = h;
  }
  return out;
}

NormEquivalenceReport norm_equivalence_check(const HermiteCoeffs& phi, int m) {
  if (m < 0) throw std::invalid_argument("norm_equivalence_check: m must be >= 0");
  const Basis basis(phi.dim, phi.degree);
  const int content = content_degree(phi, basis);
  if (phi.degree < content + 2 * m)
    throw std::invalid_argument(
        "norm_equivalence_check: truncation margin violated (need N >= content + 2m)");

  NormEquivalenceReport rep;
  rep.m = m;
  rep.norm_m = sobolev_norm(phi, static_cast<double>(m));

  // sum over all pairs (alpha, beta) with |alpha| + |beta| <= 2m of
  // || x^alpha d^beta phi ||_0, derivatives applied first
  double sum = 0.0;
  const int d = phi.dim;
  for (int total = 0; total <= 2 * m; ++total) {
    for (int db = 0; db <= total; ++db) {
      const int da = total - db;
      for (const auto& beta : enumerate_indices(d, db)) {
        if (total_degree(beta) != db) continue;
        for (const auto& alpha : enumerate_indices(d, da)) {
          if (total_degree(alpha) != da) continue;
          HermiteCoeffs v = phi;
          for (int j = 0; j < d; ++j)
            for (int r = 0; r < beta[j]; ++r) v = apply_derivative(v, j);
          for (int j = 0; j < d; ++j)
            for (int r = 0; r < alpha[j]; ++r) v = apply_position(v, j);
          sum += sobolev_norm(v, 0.0);
        }
      }
    }
  }
  rep.operator_sum = sum;
  rep.ratio_sum_over_norm = rep.norm_m > 0.0 ? sum / rep.norm_m : 0.0;
  rep.ratio_norm_over_sum = sum > 0.0 ? rep.norm_m / sum : 0.0;
  return rep;
}

}  // namespace hheat
