#include "hheat/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hheat/hermite.hpp"

namespace hheat {

QuadGrid QuadGrid::scaled(double s) const {
  QuadGrid g = *this;
  for (auto& x : g.nodes) x *= s;
  for (auto& w : g.weights) w *= s;
  return g;
}

namespace {

// h_q and h_{q-1} at s via the normalized recurrence; working with the
// Hermite functions (Gaussian factor included) keeps every intermediate
// bounded, so there is no overflow for any supported q.
void hermite_pair(int q, double s, double& hq, double& hqm1) {
  double hm = 0.0;
  double h = 0.7511255444649425 * std::exp(-0.5 * s * s);
  for (int j = 0; j < q; ++j) {
    const double hp = s * std::sqrt(2.0 / (j + 1)) * h -
                      std::sqrt(static_cast<double>(j) / (j + 1)) * hm;
    hm = h;
    h = hp;
  }
  hq = h;
  hqm1 = hm;
}

}  // namespace

QuadGrid build_quad_grid(int q, int d) {
  if (q < 1) throw std::invalid_argument("build_quad_grid: need at least one node");
  if (q > kMaxQuadNodes)
    throw std::invalid_argument("build_quad_grid: q = " + std::to_string(q) +
                                " exceeds supported ceiling " + std::to_string(kMaxQuadNodes));
  if (d < 1) throw std::invalid_argument("build_quad_grid: dimension must be >= 1");

  QuadGrid grid;
  grid.dim = d;
  grid.q = q;
  grid.nodes.assign(q, 0.0);
  grid.weights.assign(q, 0.0);

  const int m = (q + 1) / 2;  // roots come in +/- pairs
  double z = 0.0;
  for (int i = 0; i < m; ++i) {
    // initial guesses for the descending positive roots (Numerical Recipes)
    if (i == 0) {
      z = std::sqrt(2.0 * q + 1.0) - 1.85575 * std::pow(2.0 * q + 1.0, -1.0 / 6.0);
    } else if (i == 1) {
      z -= 1.14 * std::pow(static_cast<double>(q), 0.426) / z;
    } else if (i == 2) {
      z = 1.86 * z - 0.86 * grid.nodes[q - 1];
    } else if (i == 3) {
      z = 1.91 * z - 0.91 * grid.nodes[q - 2];
    } else {
      z = 2.0 * z - grid.nodes[q - i + 1];
    }

    double hq = 0.0, hqm1 = 0.0;
    bool converged = false;
    for (int it = 0; it < 100; ++it) {
      hermite_pair(q, z, hq, hqm1);
      // h_q'(z) = -z h_q(z) + sqrt(2q) h_{q-1}(z)
      const double dh = -z * hq + std::sqrt(2.0 * q) * hqm1;
      const double dz = hq / dh;
      z -= dz;
      if (std::abs(dz) <= 1e-15 * (1.0 + std::abs(z))) {
        converged = true;
        break;
      }
    }
    if (!converged) throw std::runtime_error("build_quad_grid: Newton iteration stalled");
    hermite_pair(q, z, hq, hqm1);

    // total weight (Gaussian absorbed): w = 1 / (q * h_{q-1}(z)^2)
    const double w = 1.0 / (q * hqm1 * hqm1);
    grid.nodes[q - 1 - i] = z;
    grid.nodes[i] = -z;
    grid.weights[q - 1 - i] = w;
    grid.weights[i] = w;
  }
  if (q % 2 == 1) {
    grid.nodes[q / 2] = 0.0;  // middle root is exactly zero by symmetry
    double hq = 0.0, hqm1 = 0.0;
    hermite_pair(q, 0.0, hq, hqm1);
    grid.weights[q / 2] = 1.0 / (q * hqm1 * hqm1);
  }
  return grid;
}

int projection_nodes(int N) {
  if (N < 0) throw std::invalid_argument("projection_nodes: truncation degree must be >= 0");
  return 2 * N + 16;
}

}  // namespace hheat
