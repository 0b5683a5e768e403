#include "hheat/monte_carlo.hpp"

#include <cmath>
#include <stdexcept>

#include "hheat/basis.hpp"
#include "hheat/rng.hpp"
#include "hheat/translation.hpp"

namespace hheat {

double MCEstimate::aggregate_se() const {
  double s = 0.0;
  for (double e : std_error) s += e * e;
  return std::sqrt(s);
}

namespace {

constexpr std::uint64_t kChunk = 256;  // fixed reduction granularity

struct ChunkSums {
  std::vector<cdouble> sum;
  std::vector<double> sumsq;  // sum of |v|^2 per coefficient
  std::uint64_t outside = 0;
};

template <bool Parallel>
MCEstimate mc_impl(const HermiteCoeffs& phi, double t, std::uint64_t samples,
                   std::uint64_t seed) {
  if (t < 0.0) throw std::invalid_argument("mc_expectation: time must be >= 0");
  if (samples < 1) throw std::invalid_argument("mc_expectation: need at least one sample");

  MCEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.t = t;

  const std::size_t K = phi.size();
  if (t == 0.0) {  // degenerate sampling: every draw is the identity
    est.mean = phi;
    est.std_error.assign(K, 0.0);
    return est;
  }

  const Basis basis(phi.dim, phi.degree);
  const int d = phi.dim;
  const double sigma = std::sqrt(t);
  const double envelope = envelope_radius(phi.degree);
  const std::uint64_t nchunks = (samples + kChunk - 1) / kChunk;
  std::vector<ChunkSums> partial(nchunks);

#pragma omp parallel if (Parallel)
  {
    // per-thread scratch reused across the samples this thread handles
    std::vector<cdouble> v, term, acc;
    std::vector<double> shift(static_cast<std::size_t>(d));
#pragma omp for schedule(dynamic, 1)
    for (std::uint64_t chunk = 0; chunk < nchunks; ++chunk) {
      ChunkSums& cs = partial[chunk];
      cs.sum.assign(K, cdouble{0.0, 0.0});
      cs.sumsq.assign(K, 0.0);
      const std::uint64_t lo = chunk * kChunk;
      const std::uint64_t hi = std::min(samples, lo + kChunk);
      for (std::uint64_t m = lo; m < hi; ++m) {
        Rng rng = stream_rng(seed, m);
        double r2 = 0.0;
        for (int j = 0; j < d; ++j) {
          shift[j] = sigma * rng.next_gaussian();
          r2 += shift[j] * shift[j];
        }
        if (r2 > envelope * envelope) ++cs.outside;
        v.assign(phi.c.begin(), phi.c.end());
        translate_expm_inplace(basis, shift, v, term, acc);
        for (std::size_t k = 0; k < K; ++k) {
          cs.sum[k] += v[k];
          cs.sumsq[k] += std::norm(v[k]);
        }
      }
    }
  }

  // fold chunks in index order: bit-identical for any thread count
  std::vector<cdouble> sum(K, cdouble{0.0, 0.0});
  std::vector<double> sumsq(K, 0.0);
  for (const ChunkSums& cs : partial) {
    for (std::size_t k = 0; k < K; ++k) {
      sum[k] += cs.sum[k];
      sumsq[k] += cs.sumsq[k];
    }
    est.outside_envelope += cs.outside;
  }

  est.mean = HermiteCoeffs(phi.dim, phi.degree);
  est.mean.real_valued = phi.real_valued;
  est.std_error.assign(K, 0.0);
  const double inv_m = 1.0 / static_cast<double>(samples);
  for (std::size_t k = 0; k < K; ++k) {
    est.mean.c[k] = sum[k] * inv_m;
    if (samples > 1) {
      const double var =
          std::max(0.0, (sumsq[k] - static_cast<double>(samples) * std::norm(est.mean.c[k])) /
                            static_cast<double>(samples - 1));
      est.std_error[k] = std::sqrt(var * inv_m);
    }
  }
  return est;
}

}  // namespace

MCEstimate mc_expectation(const HermiteCoeffs& phi, double t, std::uint64_t samples,
                          std::uint64_t seed) {
  return mc_impl<true>(phi, t, samples, seed);
}

MCEstimate mc_expectation_serial(const HermiteCoeffs& phi, double t, std::uint64_t samples,
                                 std::uint64_t seed) {
  return mc_impl<false>(phi, t, samples, seed);
}

}  // namespace hheat
