#include "hheat/ensembles.hpp"

#include <stdexcept>

#include "hheat/basis.hpp"
#include "hheat/rng.hpp"

namespace hheat {

namespace {

HermiteCoeffs random_impl(int d, int N, int content, std::uint64_t seed, bool complex_parts) {
  if (content < 0 || content > N)
    throw std::invalid_argument("random_coeffs: content degree must lie in [0, N]");
  const Basis basis(d, N);
  HermiteCoeffs out(d, N);
  out.real_valued = !complex_parts;
  Rng rng = stream_rng(seed, 0);
  for (std::size_t i = 0; i < out.c.size(); ++i) {
    if (basis.shell(i) > content) continue;
    const double re = rng.next_gaussian();
    const double im = complex_parts ? rng.next_gaussian() : 0.0;
    out.c[i] = cdouble{re, im};
  }
  return out;
}

}  // namespace

HermiteCoeffs random_coeffs(int d, int N, int content_degree, std::uint64_t seed) {
  return random_impl(d, N, content_degree, seed, false);
}

HermiteCoeffs random_coeffs_complex(int d, int N, int content_degree, std::uint64_t seed) {
  return random_impl(d, N, content_degree, seed, true);
}

}  // namespace hheat
