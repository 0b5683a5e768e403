#include "hheat/brownian.hpp"

#include <cmath>
#include <stdexcept>

#include "hheat/rng.hpp"

namespace hheat {

bool BrownianPath::has_drift() const {
  for (double b : drift)
    if (b != 0.0) return true;
  return false;
}

BrownianPath sample_brownian(int d, double T, int n, std::uint64_t seed,
                             std::span<const double> drift) {
  if (d < 1) throw std::invalid_argument("sample_brownian: dimension must be >= 1");
  if (!(T > 0.0)) throw std::invalid_argument("sample_brownian: horizon must be positive");
  if (n < 1) throw std::invalid_argument("sample_brownian: need at least one step");
  if (!drift.empty() && static_cast<int>(drift.size()) != d)
    throw std::invalid_argument("sample_brownian: drift dimension mismatch");

  BrownianPath path;
  path.dim = d;
  path.sampled_brownian = true;
  path.times.resize(static_cast<std::size_t>(n) + 1);
  path.positions.assign((static_cast<std::size_t>(n) + 1) * d, 0.0);
  if (!drift.empty()) path.drift.assign(drift.begin(), drift.end());

  const double h = T / n;
  const double sqrt_h = std::sqrt(h);
  Rng rng = stream_rng(seed, 0);
  for (int i = 0; i <= n; ++i) path.times[i] = T * static_cast<double>(i) / n;
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j < d; ++j) {
      const double mean = drift.empty() ? 0.0 : drift[j] * h;
      path.positions[static_cast<std::size_t>(i) * d + j] =
          path.positions[static_cast<std::size_t>(i - 1) * d + j] + mean +
          sqrt_h * rng.next_gaussian();
    }
  }
  return path;
}

std::vector<double> realized_covariation(const BrownianPath& path) {
  const int d = path.dim;
  const std::size_t n = path.steps();
  std::vector<double> cov((n + 1) * d * d, 0.0);
  for (std::size_t i = 1; i <= n; ++i) {
    const auto prev = path.at(i - 1);
    const auto cur = path.at(i);
    for (int a = 0; a < d; ++a) {
      for (int b = 0; b < d; ++b) {
        cov[i * d * d + a * d + b] = cov[(i - 1) * d * d + a * d + b] +
                                     (cur[a] - prev[a]) * (cur[b] - prev[b]);
      }
    }
  }
  return cov;
}

BrownianPath coarsen(const BrownianPath& path, int factor) {
  if (factor < 1) throw std::invalid_argument("coarsen: factor must be >= 1");
  const std::size_t n = path.steps();
  if (n % static_cast<std::size_t>(factor) != 0)
    throw std::invalid_argument("coarsen: factor must divide the step count");
  BrownianPath out;
  out.dim = path.dim;
  out.drift = path.drift;
  out.sampled_brownian = path.sampled_brownian;
  const std::size_t m = n / factor;
  out.times.resize(m + 1);
  out.positions.resize((m + 1) * path.dim);
  for (std::size_t i = 0; i <= m; ++i) {
    out.times[i] = path.times[i * factor];
    for (int j = 0; j < path.dim; ++j)
      out.positions[i * path.dim + j] = path.positions[(i * factor) * path.dim + j];
  }
  return out;
}

}  // namespace hheat
