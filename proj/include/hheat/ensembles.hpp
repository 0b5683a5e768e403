#pragma once

#include <cstdint>

#include "hheat/coeffs.hpp"

namespace hheat {

/// Random test vector: i.i.d. standard normal real coefficients on
/// |k| <= content_degree, zero-padded up to N. Keeping content at N/2 or
/// below leaves operator applications inside the truncation margin.
HermiteCoeffs random_coeffs(int d, int N, int content_degree, std::uint64_t seed);

/// Complex variant (independent normals for both parts).
HermiteCoeffs random_coeffs_complex(int d, int N, int content_degree, std::uint64_t seed);

}  // namespace hheat
