#include "hheat/monotonicity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hheat/ensembles.hpp"
#include "hheat/sobolev.hpp"

namespace hheat {

double monotonicity_ratio(const HermiteCoeffs& phi, double p) {
  const double den = sobolev_norm(phi, p - 1.0);
  if (den == 0.0) throw std::invalid_argument("monotonicity_ratio: zero-norm input");
  const HermiteCoeffs lap = apply_laplacian(phi);
  double num = std::real(sobolev_inner(lap, phi, p - 1.0));  // 2 <(1/2)Lap phi, phi>
  for (int j = 0; j < phi.dim; ++j) {
    const double nj = sobolev_norm(apply_derivative(phi, j), p - 1.0);
    num += nj * nj;
  }
  return num / (den * den);
}

MonotonicityReport monotonicity_scan(double p, int ensemble, int d, int N, std::uint64_t seed) {
  if (!(p < 0.0)) throw std::invalid_argument("monotonicity_scan: requires p < 0");
  if (ensemble < 1) throw std::invalid_argument("monotonicity_scan: empty ensemble");

  MonotonicityReport rep;
  rep.p = p;
  rep.d = d;
  rep.N = N;
  rep.ensemble = ensemble;
  rep.seed = seed;
  rep.ratios.reserve(ensemble);

  std::uint64_t draw = 0;
  for (int i = 0; i < ensemble; ++i) {
    HermiteCoeffs phi = random_coeffs(d, N, N / 2, seed + draw++);
    while (l2_norm(phi) == 0.0) phi = random_coeffs(d, N, N / 2, seed + draw++);
    rep.ratios.push_back(monotonicity_ratio(phi, p));
  }
  rep.max_ratio = *std::max_element(rep.ratios.begin(), rep.ratios.end());
  return rep;
}

}  // namespace hheat
