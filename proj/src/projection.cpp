#include "hheat/projection.hpp"

#include <cmath>
#include <stdexcept>

#include "hheat/basis.hpp"
#include "hheat/hermite.hpp"

namespace hheat {

std::size_t tensor_size(const QuadGrid& grid) {
  std::size_t n = 1;
  for (int j = 0; j < grid.dim; ++j) n *= static_cast<std::size_t>(grid.q);
  return n;
}

namespace {

// h_l(node_i) for l <= lmax at every node; table[i * (lmax+1) + l].
std::vector<double> node_table(std::span<const double> nodes, int lmax) {
  std::vector<double> table(nodes.size() * static_cast<std::size_t>(lmax + 1));
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto vals = hermite_all_1d(lmax, nodes[i]);
    std::copy(vals.begin(), vals.end(), table.begin() + i * (lmax + 1));
  }
  return table;
}

void decompose(std::size_t flat, int d, int q, int* digits) {
  for (int j = d - 1; j >= 0; --j) {
    digits[j] = static_cast<int>(flat % q);
    flat /= q;
  }
}

template <bool Parallel>
HermiteCoeffs project_values_impl(std::span<const cdouble> values, const QuadGrid& grid, int N) {
  const int d = grid.dim;
  if (values.size() != tensor_size(grid))
    throw std::invalid_argument("project_values: value array does not match grid");
  const Basis basis(d, N);
  const auto table = node_table(grid.nodes, N);
  const int stride = N + 1;
  HermiteCoeffs out(d, N);

  const std::size_t nk = basis.size();
  const std::size_t nn = values.size();
#pragma omp parallel for schedule(static) if (Parallel)
  for (std::size_t ik = 0; ik < nk; ++ik) {
    const MultiIndex& k = basis.index(ik);
    cdouble acc{0.0, 0.0};
    int digits[8];
    for (std::size_t i = 0; i < nn; ++i) {
      decompose(i, d, grid.q, digits);
      double w = 1.0;
      for (int j = 0; j < d; ++j)
        w *= grid.weights[digits[j]] * table[static_cast<std::size_t>(digits[j]) * stride + k[j]];
      acc += w * values[i];
    }
    out.c[ik] = acc;
  }
  return out;
}

template <bool Parallel>
std::vector<cdouble> synthesize_grid_impl(const HermiteCoeffs& phi, const QuadGrid& grid,
                                          const double* shift) {
  if (grid.dim != phi.dim)
    throw std::invalid_argument("synthesize_on_grid: grid/coefficient dimension mismatch");
  const int d = phi.dim;
  const int N = phi.degree;
  const Basis basis(d, N);
  const int stride = N + 1;

  // per-axis shifted node tables; axes share nodes but not shifts
  std::vector<std::vector<double>> tables(d);
  for (int j = 0; j < d; ++j) {
    std::vector<double> pts(grid.nodes.begin(), grid.nodes.end());
    if (shift != nullptr)
      for (auto& s : pts) s -= shift[j];
    tables[j] = node_table(pts, N);
  }

  const std::size_t nn = tensor_size(grid);
  const std::size_t nk = basis.size();
  std::vector<cdouble> values(nn);
#pragma omp parallel for schedule(static) if (Parallel)
  for (std::size_t i = 0; i < nn; ++i) {
    int digits[8];
    decompose(i, d, grid.q, digits);
    cdouble acc{0.0, 0.0};
    for (std::size_t ik = 0; ik < nk; ++ik) {
      const MultiIndex& k = basis.index(ik);
      double h = 1.0;
      for (int j = 0; j < d; ++j)
        h *= tables[j][static_cast<std::size_t>(digits[j]) * stride + k[j]];
      acc += phi.c[ik] * h;
    }
    values[i] = acc;
  }
  return values;
}

template <bool Parallel>
HermiteCoeffs project_function_impl(const RealField& f, int d, int N, int Q) {
  if (d < 1) throw std::invalid_argument("project_function: dimension must be >= 1");
  if (N < 0) throw std::invalid_argument("project_function: truncation degree must be >= 0");
  if (Q < projection_nodes(N))
    throw std::invalid_argument("project_function: Q below the 2N+16 floor for this truncation");
  const QuadGrid grid = build_quad_grid(Q, d);
  const std::size_t nn = tensor_size(grid);
  std::vector<cdouble> values(nn);
  for (std::size_t i = 0; i < nn; ++i) {
    int digits[8];
    decompose(i, d, grid.q, digits);
    double pt[8];
    for (int j = 0; j < d; ++j) pt[j] = grid.nodes[digits[j]];
    const double v = f(std::span<const double>(pt, static_cast<std::size_t>(d)));
    if (!std::isfinite(v))
      throw std::domain_error("project_function: non-finite function value at a grid node");
    values[i] = v;
  }
  auto out = Parallel ? project_values(values, grid, N) : project_values_serial(values, grid, N);
  out.real_valued = true;
  return out;
}

}  // namespace

HermiteCoeffs project_values(std::span<const cdouble> values, const QuadGrid& grid, int N) {
  return project_values_impl<true>(values, grid, N);
}

HermiteCoeffs project_values_serial(std::span<const cdouble> values, const QuadGrid& grid, int N) {
  return project_values_impl<false>(values, grid, N);
}

HermiteCoeffs project_function(const RealField& f, int d, int N, int Q) {
  return project_function_impl<true>(f, d, N, Q);
}

HermiteCoeffs project_function_serial(const RealField& f, int d, int N, int Q) {
  return project_function_impl<false>(f, d, N, Q);
}

cdouble synthesize(const HermiteCoeffs& phi, std::span<const double> x) {
  if (static_cast<int>(x.size()) != phi.dim)
    throw std::invalid_argument("synthesize: point dimension mismatch");
  const auto indices = enumerate_indices(phi.dim, phi.degree);
  std::vector<std::vector<double>> tables(phi.dim);
  for (int j = 0; j < phi.dim; ++j) tables[j] = hermite_all_1d(phi.degree, x[j]);
  cdouble acc{0.0, 0.0};
  for (std::size_t i = 0; i < indices.size(); ++i) {
    double h = 1.0;
    for (int j = 0; j < phi.dim; ++j) h *= tables[j][indices[i][j]];
    acc += phi.c[i] * h;
  }
  return acc;
}

std::vector<cdouble> synthesize_on_grid(const HermiteCoeffs& phi, const QuadGrid& grid) {
  return synthesize_grid_impl<true>(phi, grid, nullptr);
}

std::vector<cdouble> synthesize_on_grid_serial(const HermiteCoeffs& phi, const QuadGrid& grid) {
  return synthesize_grid_impl<false>(phi, grid, nullptr);
}

std::vector<cdouble> synthesize_on_grid_shifted(const HermiteCoeffs& phi, const QuadGrid& grid,
                                                std::span<const double> x) {
  if (static_cast<int>(x.size()) != phi.dim)
    throw std::invalid_argument("synthesize_on_grid_shifted: shift dimension mismatch");
  return synthesize_grid_impl<true>(phi, grid, x.data());
}

}  // namespace hheat
