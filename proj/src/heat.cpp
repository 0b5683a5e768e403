#include "hheat/heat.hpp"

#include <cmath>
#include <stdexcept>

#include "hheat/projection.hpp"
#include "hheat/quadrature.hpp"
#include "hheat/sobolev.hpp"
#include "hheat/translation.hpp"

namespace hheat {

double heat_kernel(std::span<const double> x, double t, int d) {
  if (static_cast<int>(x.size()) != d)
    throw std::invalid_argument("heat_kernel: point dimension mismatch");
  if (!(t > 0.0)) throw std::invalid_argument("heat_kernel: time must be positive");
  double r2 = 0.0;
  for (double v : x) r2 += v * v;
  return std::pow(2.0 * M_PI * t, -0.5 * d) * std::exp(-r2 / (2.0 * t));
}

namespace {

// multiply phi by g(y) = exp(-(t/2)|y|^2) - (subtract_one ? 1 : 0) on the grid
HermiteCoeffs gaussian_multiplier(const HermiteCoeffs& phi, double t, int Q, bool subtract_one) {
  const QuadGrid grid = build_quad_grid(Q, phi.dim);
  auto values = synthesize_on_grid(phi, grid);

  const int d = phi.dim;
  const int q = grid.q;
  const std::size_t nn = values.size();
  for (std::size_t i = 0; i < nn; ++i) {
    std::size_t f = i;
    double r2 = 0.0;
    for (int j = 0; j < d; ++j) {
      const double y = grid.nodes[f % q];
      r2 += y * y;
      f /= q;
    }
    const double g = std::exp(-0.5 * t * r2) - (subtract_one ? 1.0 : 0.0);
    values[i] *= g;
  }
  HermiteCoeffs out = project_values(values, grid, phi.degree);
  out.real_valued = phi.real_valued;
  return out;
}

}  // namespace

HermiteCoeffs heat_apply(const HermiteCoeffs& phi, double t) {
  return heat_apply(phi, t, projection_nodes(phi.degree));
}

HermiteCoeffs heat_apply(const HermiteCoeffs& phi, double t, int Q) {
  if (t < 0.0) throw std::invalid_argument("heat_apply: time must be >= 0");
  if (t == 0.0) return phi;
  const HermiteCoeffs hat = fourier(phi, FourierDirection::Forward);
  HermiteCoeffs mult = gaussian_multiplier(hat, t, Q, /*subtract_one=*/false);
  HermiteCoeffs out = fourier(mult, FourierDirection::Inverse);
  out.real_valued = phi.real_valued;
  return out;
}

HermiteCoeffs st_operator(const HermiteCoeffs& phi, double t) {
  return st_operator(phi, t, projection_nodes(phi.degree));
}

HermiteCoeffs st_operator(const HermiteCoeffs& phi, double t, int Q) {
  if (t < 0.0) throw std::invalid_argument("st_operator: time must be >= 0");
  if (t == 0.0) return HermiteCoeffs::zero(phi.dim, phi.degree);
  return gaussian_multiplier(phi, t, Q, /*subtract_one=*/true);
}

HermiteCoeffs convolution_reference(const HermiteCoeffs& phi, double t, int Q) {
  if (!(t > 0.0)) throw std::invalid_argument("convolution_reference: time must be positive");
  const int d = phi.dim;
  const int N = phi.degree;
  if (Q < projection_nodes(N))
    throw std::invalid_argument("convolution_reference: Q below the 2N+16 floor");

  // inner grid: integrand decays like exp(-u^2/2) -> scale by sqrt(2);
  // outer grid: (phi * p_t) h_k decays like exp(-a y^2) with
  // a = 1/(2(1+t)) + 1/2 -> scale by 1/sqrt(a)
  const QuadGrid inner = build_quad_grid(Q, 1).scaled(std::sqrt(2.0));
  const double a = 1.0 / (2.0 * (1.0 + t)) + 0.5;
  const QuadGrid outer_1d = build_quad_grid(Q, 1).scaled(1.0 / std::sqrt(a));

  QuadGrid outer = outer_1d;
  outer.dim = d;

  // phi synthesized on the (tensor) inner grid once
  QuadGrid inner_d = inner;
  inner_d.dim = d;
  const auto inner_vals = synthesize_on_grid(phi, inner_d);

  const std::size_t nn_out = tensor_size(outer);
  const std::size_t nn_in = inner_vals.size();
  const int q = Q;
  std::vector<cdouble> conv(nn_out);
#pragma omp parallel for schedule(static)
  for (std::size_t io = 0; io < nn_out; ++io) {
    double xo[8];
    std::size_t f = io;
    for (int j = d - 1; j >= 0; --j) {
      xo[j] = outer.nodes[f % q];
      f /= q;
    }
    cdouble acc{0.0, 0.0};
    for (std::size_t ii = 0; ii < nn_in; ++ii) {
      double w = 1.0;
      double r2 = 0.0;
      std::size_t g = ii;
      for (int j = d - 1; j >= 0; --j) {
        const int dig = static_cast<int>(g % q);
        g /= q;
        const double u = inner.nodes[dig];
        w *= inner.weights[dig];
        const double diff = xo[j] - u;
        r2 += diff * diff;
      }
      acc += w * inner_vals[ii] * std::exp(-r2 / (2.0 * t));
    }
    conv[io] = acc * std::pow(2.0 * M_PI * t, -0.5 * d);
  }

  HermiteCoeffs out = project_values(conv, outer, N);
  out.real_valued = phi.real_valued;
  return out;
}

ContinuityReport strong_continuity_scan(const HermiteCoeffs& phi, double p,
                                        std::span<const double> t_grid) {
  if (t_grid.size() < 2)
    throw std::invalid_argument("strong_continuity_scan: need at least two times");
  ContinuityReport rep;
  rep.p = p;
  rep.d = phi.dim;
  rep.N = phi.degree;
  rep.t_grid.assign(t_grid.begin(), t_grid.end());
  rep.deviations.assign(t_grid.size(), 0.0);
#pragma omp parallel for schedule(static)
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    rep.deviations[i] = sobolev_norm(heat_apply(phi, t_grid[i]) - phi, p);
  rep.slope = loglog_slope(rep.t_grid, rep.deviations);
  return rep;
}

std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
  if (!(lo > 0.0) || !(hi > lo)) throw std::invalid_argument("log_grid: need 0 < lo < hi");
  if (points_per_decade < 1) throw std::invalid_argument("log_grid: points_per_decade >= 1");
  const double decades = std::log10(hi / lo);
  const int n = std::max(2, static_cast<int>(std::round(decades * points_per_decade)) + 1);
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    g[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
  return g;
}

}  // namespace hheat
