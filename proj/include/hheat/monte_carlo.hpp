#pragma once

#include <cstdint>
#include <vector>

#include "hheat/coeffs.hpp"

namespace hheat {

/// Empirical expectation of the random translate tau_{X_t} phi over M direct
/// Gaussian draws X_t ~ N(0, t I), with per-coefficient standard errors.
struct MCEstimate {
  HermiteCoeffs mean;
  std::vector<double> std_error;  // per coefficient
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  double t = 0.0;
  // draws whose |X_t| exceeded the truncation's accuracy envelope; surfaced
  // so heavy-tailed configurations are visible in reports
  std::uint64_t outside_envelope = 0;

  /// Norm-level standard error sqrt(sum_k SE_k^2): the coefficient errors
  /// combined into one conservative bound on the p = 0 distance.
  double aggregate_se() const;
};

/// Deterministic under any thread count: sample m always uses stream m of the
/// master seed, and the reduction folds fixed 256-sample chunks in index
/// order. t = 0 returns phi exactly with zero variance.
MCEstimate mc_expectation(const HermiteCoeffs& phi, double t, std::uint64_t samples,
                          std::uint64_t seed);
MCEstimate mc_expectation_serial(const HermiteCoeffs& phi, double t, std::uint64_t samples,
                                 std::uint64_t seed);

}  // namespace hheat
