#pragma once

#include <span>
#include <vector>

#include "hheat/basis.hpp"
#include "hheat/coeffs.hpp"
#include "hheat/linalg.hpp"

namespace hheat {

/// Radius beyond which a translated distribution's mass starts leaving the
/// resolvable region of the degree-N truncation: 0.5 * sqrt(2N).
double envelope_radius(int N);

struct TranslateDiagnostics {
  bool inside_envelope = true;
  double envelope = 0.0;           // envelope_radius(N)
  double shift_norm = 0.0;         // |x|
  double roundtrip_defect = -1.0;  // ||tau_{-x} tau_x phi - phi||_0, when probed
};

/// The (skew-symmetric, banded) generator of translation by x on the
/// truncated space: G = -sum_j x_j d_j.
Matrix translation_generator(int d, int N, std::span<const double> x);

/// Truncated translation operator U(x) = exp(G) as a dense matrix, computed
/// by Pade scaling-and-squaring. Exactly orthogonal up to rounding because
/// the generator is skew.
Matrix translation_matrix(int d, int N, std::span<const double> x);

/// Translation by the generator exponential applied directly to phi
/// (scaling + truncated Taylor on the vector; cross-validated against
/// translation_matrix). Preserves the p = 0 norm to roundoff. When diag is
/// given and |x| exceeds the envelope, an a-posteriori round-trip defect is
/// attached; the result is returned either way.
HermiteCoeffs translate_expm(const HermiteCoeffs& phi, std::span<const double> x,
                             TranslateDiagnostics* diag = nullptr);

/// Basis-aware variant for hot loops.
HermiteCoeffs translate_expm(const Basis& basis, const HermiteCoeffs& phi,
                             std::span<const double> x);

/// In-place translation of a raw coefficient vector (innermost MC kernel).
void translate_expm_inplace(const Basis& basis, std::span<const double> x,
                            std::vector<cdouble>& v, std::vector<cdouble>& scratch_term,
                            std::vector<cdouble>& scratch_acc);

/// Independent translation route: synthesize phi, shift the argument on a
/// Q-point grid, re-project. Requires the grid to cover the shifted support:
/// sqrt(2Q) >= sqrt(2N+d) + max_j |x_j|; throws otherwise.
HermiteCoeffs translate_quadrature(const HermiteCoeffs& phi, std::span<const double> x, int Q);

/// Growth of ||tau_x phi||_p / ||phi||_p over shift radii.
struct TranslationReport {
  double p = 0.0;
  int d = 1;
  int N = 0;
  int degree_bound = 0;         // 2 ([|p|] + 1)
  std::vector<double> radii;    // strictly increasing
  std::vector<double> ratios;   // sup over sampled directions, per radius
  double slope = 0.0;           // log-log fit over the largest decade
};

/// Deterministic direction set: +/-1 for d = 1, equispaced angles for d = 2,
/// a Fibonacci sphere for d = 3.
std::vector<std::vector<double>> spread_directions(int d, int count);

/// Scans radii x directions, fits the growth exponent on the top decade.
/// Throws on zero-norm phi or non-increasing radii.
TranslationReport norm_bound_scan(const HermiteCoeffs& phi, double p,
                                  std::span<const double> radii, int n_directions = 16);
TranslationReport norm_bound_scan_serial(const HermiteCoeffs& phi, double p,
                                         std::span<const double> radii, int n_directions = 16);

/// Least-squares slope of log(y) against log(x); helper shared by the scans.
double loglog_slope(std::span<const double> x, std::span<const double> y);

}  // namespace hheat
