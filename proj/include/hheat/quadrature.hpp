#pragma once

#include <vector>

namespace hheat {

/// Gauss-Hermite rule with the Gaussian factor absorbed into the weights:
///   integral of F over R^d  ~=  sum over tensor nodes of (prod_j w_{i_j}) F(x_i)
/// exact whenever F(y) * exp(|y|^2) is a polynomial of per-axis degree <= 2q-1.
/// Nodes and weights are identical per axis; d-dimensional grids are tensor
/// products of the 1-D rule.
struct QuadGrid {
  int dim = 1;
  int q = 0;                    // nodes per dimension
  std::vector<double> nodes;    // strictly increasing, symmetric about 0
  std::vector<double> weights;  // strictly positive

  /// Rule for integrands whose natural decay is exp(-|y|^2 / s^2):
  /// nodes scaled by s, weights by s (per axis).
  QuadGrid scaled(double s) const;
};

/// Largest supported node count; node computation beyond this is refused.
inline constexpr int kMaxQuadNodes = 512;

/// Builds the q-point rule (per dimension). Throws std::invalid_argument for
/// q < 1, q > kMaxQuadNodes, or d < 1.
QuadGrid build_quad_grid(int q, int d = 1);

/// Node count used to project onto the degree-N truncated basis: 2N + 16.
int projection_nodes(int N);

}  // namespace hheat
