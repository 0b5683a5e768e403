#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace hheat {

/// A discretized d-dimensional Brownian path started at the origin, with an
/// optional deterministic drift. positions is row-major: step i, axis j at
/// positions[i * dim + j]; times has n+1 entries 0 = t_0 < ... < t_n = T.
struct BrownianPath {
  int dim = 1;
  std::vector<double> times;
  std::vector<double> positions;
  std::vector<double> drift;  // size dim, or empty for driftless

  // Set by sample_brownian: increments are genuine Gaussian steps, so the
  // exact bracket h*I applies. Hand-built paths keep the generic
  // (realized-covariation) semimartingale calculus.
  bool sampled_brownian = false;

  std::size_t steps() const { return times.empty() ? 0 : times.size() - 1; }
  std::span<const double> at(std::size_t i) const {
    return {positions.data() + i * static_cast<std::size_t>(dim),
            static_cast<std::size_t>(dim)};
  }
  bool has_drift() const;
};

/// Samples a path on the uniform grid t_i = i T / n. Increments are
/// independent Gaussians with mean drift*h and covariance h*I; the result is
/// a pure function of (d, T, n, seed, drift).
BrownianPath sample_brownian(int d, double T, int n, std::uint64_t seed,
                             std::span<const double> drift = {});

/// Cumulative realized covariation: entry (i, a, b) holds
/// sum over s < i of dX^a_s dX^b_s; flat layout i * d * d + a * d + b.
std::vector<double> realized_covariation(const BrownianPath& path);

/// Keeps every `factor`-th point (factor must divide the step count);
/// the canonical way to run one driving path at several resolutions.
BrownianPath coarsen(const BrownianPath& path, int factor);

}  // namespace hheat
