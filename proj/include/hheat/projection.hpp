#pragma once

#include <functional>
#include <span>

#include "hheat/coeffs.hpp"
#include "hheat/quadrature.hpp"

namespace hheat {

using RealField = std::function<double(std::span<const double>)>;

/// L2 projection of f onto the truncated basis: c_k ~= <f, h_k> computed on
/// the tensor Gauss-Hermite grid. Throws if f returns a non-finite value at
/// any node, or if Q violates the Q-rule floor for N.
HermiteCoeffs project_function(const RealField& f, int d, int N, int Q);
HermiteCoeffs project_function_serial(const RealField& f, int d, int N, int Q);

/// Partial-sum evaluation sum_k c_k h_k(x).
cdouble synthesize(const HermiteCoeffs& phi, std::span<const double> x);

/// synthesize(phi) at every tensor node of `grid` (flat index, last axis
/// fastest). The workhorse behind grid-side multiplication operators.
std::vector<cdouble> synthesize_on_grid(const HermiteCoeffs& phi, const QuadGrid& grid);
std::vector<cdouble> synthesize_on_grid_serial(const HermiteCoeffs& phi, const QuadGrid& grid);

/// Same but evaluated at nodes shifted by -x (i.e. values of y -> phi(y - x)).
std::vector<cdouble> synthesize_on_grid_shifted(const HermiteCoeffs& phi, const QuadGrid& grid,
                                                std::span<const double> x);

/// Projection of complex point values sampled on the tensor grid (flat index
/// as produced by synthesize_on_grid).
HermiteCoeffs project_values(std::span<const cdouble> values, const QuadGrid& grid, int N);
HermiteCoeffs project_values_serial(std::span<const cdouble> values, const QuadGrid& grid, int N);

/// Number of tensor nodes q^d of a grid.
std::size_t tensor_size(const QuadGrid& grid);

}  // namespace hheat
