#pragma once

#include <cstdint>
#include <vector>

#include "hheat/coeffs.hpp"

namespace hheat {

/// Empirical coercivity constant of the drift form at order p - 1:
///   ratio(phi) = ( 2 <(1/2) Lap phi, phi>_{p-1} + sum_j ||d_j phi||^2_{p-1} )
///                / ||phi||^2_{p-1}
/// maximized over a random ensemble. Boundedness and stability under
/// N-doubling are what the uniqueness argument needs.
struct MonotonicityReport {
  double p = 0.0;
  int d = 1;
  int N = 0;
  int ensemble = 0;
  std::uint64_t seed = 0;
  std::vector<double> ratios;
  double max_ratio = 0.0;
};

/// Requires p < 0. Ensemble members are random_coeffs with content N/2;
/// zero-norm draws are redrawn.
MonotonicityReport monotonicity_scan(double p, int ensemble, int d, int N, std::uint64_t seed);

/// The raw ratio for one vector (used by tests with closed-form inputs).
double monotonicity_ratio(const HermiteCoeffs& phi, double p);

}  // namespace hheat
