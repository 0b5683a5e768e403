#pragma once

#include <span>
#include <vector>

#include "hheat/coeffs.hpp"

namespace hheat {

/// Gaussian heat kernel density p_t(x) = (2 pi t)^{-d/2} exp(-|x|^2 / (2t)).
/// Throws for t <= 0.
double heat_kernel(std::span<const double> x, double t, int d);

/// Heat semigroup on coefficient space: conjugation of the Fourier transform
/// with multiplication by exp(-(t/2)|y|^2) on a quadrature grid. t = 0 is the
/// identity exactly. Q defaults to the projection rule for phi's truncation.
HermiteCoeffs heat_apply(const HermiteCoeffs& phi, double t);
HermiteCoeffs heat_apply(const HermiteCoeffs& phi, double t, int Q);

/// Independent oracle: double-quadrature convolution with p_t, re-projected.
/// The outer grid is widened to cover the sqrt(1+t) spread. Throws for t <= 0
/// or insufficient coverage.
HermiteCoeffs convolution_reference(const HermiteCoeffs& phi, double t, int Q);

/// Multiplication by (exp(-(t/2)|y|^2) - 1); S_0 = 0 exactly.
HermiteCoeffs st_operator(const HermiteCoeffs& phi, double t);
HermiteCoeffs st_operator(const HermiteCoeffs& phi, double t, int Q);

struct ContinuityReport {
  double p = 0.0;
  int d = 1;
  int N = 0;
  std::vector<double> t_grid;
  std::vector<double> deviations;  // ||T_t phi - phi||_p
  double slope = 0.0;              // log-log fit over the full grid
};

/// ||T_t phi - phi||_p over a (logarithmic) t-grid with a slope fit; linear
/// decay (slope ~ 1) is the strong-continuity signature for smooth phi.
ContinuityReport strong_continuity_scan(const HermiteCoeffs& phi, double p,
                                        std::span<const double> t_grid);

/// 12-points-per-decade logarithmic grid over [lo, hi].
std::vector<double> log_grid(double lo, double hi, int points_per_decade = 12);

}  // namespace hheat
