#include "hheat/translation.hpp"

#include <cmath>
#include <stdexcept>

#include "hheat/projection.hpp"
#include "hheat/sobolev.hpp"

namespace hheat {

double envelope_radius(int N) { return 0.5 * std::sqrt(2.0 * N); }

Matrix translation_generator(int d, int N, std::span<const double> x) {
  if (static_cast<int>(x.size()) != d)
    throw std::invalid_argument("translation_generator: shift dimension mismatch");
  const Basis basis(d, N);
  const std::size_t n = basis.size();
  Matrix g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (int j = 0; j < d; ++j) {
      if (x[j] == 0.0) continue;
      // column i of -x_j d_j
      const int dn = basis.down(i, j);
      if (dn >= 0) g(static_cast<std::size_t>(dn), i) -= x[j] * 0.5 * basis.lower_weight(i, j);
      const int up = basis.up(i, j);
      if (up >= 0) g(static_cast<std::size_t>(up), i) += x[j] * 0.5 * basis.raise_weight(i, j);
    }
  }
  return g;
}

Matrix translation_matrix(int d, int N, std::span<const double> x) {
  return expm_pade(translation_generator(d, N, x));
}

namespace {

double generator_norm1(const Basis& basis, std::span<const double> x) {
  double best = 0.0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    double col = 0.0;
    for (int j = 0; j < basis.dim(); ++j) {
      double w = 0.0;
      if (basis.down(i, j) >= 0) w += 0.5 * basis.lower_weight(i, j);
      if (basis.up(i, j) >= 0) w += 0.5 * basis.raise_weight(i, j);
      col += std::abs(x[j]) * w;
    }
    best = std::max(best, col);
  }
  return best;
}

void apply_generator(const Basis& basis, std::span<const double> x, double inv_s,
                     std::span<const cdouble> in, std::span<cdouble> out) {
  for (auto& z : out) z = cdouble{0.0, 0.0};
  const int d = basis.dim();
  for (std::size_t i = 0; i < in.size(); ++i) {
    const cdouble v = in[i];
    if (v == cdouble{0.0, 0.0}) continue;
    for (int j = 0; j < d; ++j) {
      if (x[j] == 0.0) continue;
      const double xj = x[j] * inv_s;
      const int dn = basis.down(i, j);
      if (dn >= 0) out[dn] -= xj * 0.5 * basis.lower_weight(i, j) * v;
      const int up = basis.up(i, j);
      if (up >= 0) out[up] += xj * 0.5 * basis.raise_weight(i, j) * v;
    }
  }
}

double norm1(std::span<const cdouble> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::abs(z);
  return s;
}

}  // namespace

void translate_expm_inplace(const Basis& basis, std::span<const double> x,
                            std::vector<cdouble>& v, std::vector<cdouble>& term,
                            std::vector<cdouble>& acc) {
  bool zero_shift = true;
  for (double xv : x) zero_shift = zero_shift && (xv == 0.0);
  if (zero_shift) return;

  // substeps keep the scaled generator norm at or below 1/2
  const double g1 = generator_norm1(basis, x);
  const int substeps = std::max(1, static_cast<int>(std::ceil(g1 / 0.5)));
  const double inv_s = 1.0 / substeps;

  constexpr int kMaxTerms = 48;
  constexpr double kTol = 1e-16;
  term.resize(v.size());
  acc.resize(v.size());
  for (int step = 0; step < substeps; ++step) {
    std::copy(v.begin(), v.end(), acc.begin());
    std::copy(v.begin(), v.end(), term.begin());
    int small_in_a_row = 0;
    for (int j = 1; j <= kMaxTerms; ++j) {
      apply_generator(basis, x, inv_s / j, term, v);  // v <- (G/s) term / j
      term.swap(v);
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
      if (norm1(term) <= kTol * norm1(acc)) {
        if (++small_in_a_row == 2) break;
      } else {
        small_in_a_row = 0;
      }
    }
    v.swap(acc);
  }
}

HermiteCoeffs translate_expm(const Basis& basis, const HermiteCoeffs& phi,
                             std::span<const double> x) {
  if (static_cast<int>(x.size()) != phi.dim)
    throw std::invalid_argument("translate_expm: shift dimension mismatch");
  for (double v : x)
    if (!std::isfinite(v)) throw std::invalid_argument("translate_expm: shift must be finite");
  HermiteCoeffs out = phi;
  std::vector<cdouble> term, acc;
  translate_expm_inplace(basis, x, out.c, term, acc);
  return out;
}

HermiteCoeffs translate_expm(const HermiteCoeffs& phi, std::span<const double> x,
                             TranslateDiagnostics* diag) {
  const Basis basis(phi.dim, phi.degree);
  HermiteCoeffs out = translate_expm(basis, phi, x);
  if (diag != nullptr) {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    diag->shift_norm = std::sqrt(r2);
    diag->envelope = envelope_radius(phi.degree);
    diag->inside_envelope = diag->shift_norm <= diag->envelope;
    diag->roundtrip_defect = -1.0;
    if (!diag->inside_envelope) {
      std::vector<double> back(x.begin(), x.end());
      for (auto& v : back) v = -v;
      diag->roundtrip_defect = l2_norm(translate_expm(basis, out, back) - phi);
    }
  }
  return out;
}

HermiteCoeffs translate_quadrature(const HermiteCoeffs& phi, std::span<const double> x, int Q) {
  if (static_cast<int>(x.size()) != phi.dim)
    throw std::invalid_argument("translate_quadrature: shift dimension mismatch");
  double max_shift = 0.0;
  for (double v : x) max_shift = std::max(max_shift, std::abs(v));
  const double reach = std::sqrt(2.0 * Q);
  const double need = std::sqrt(2.0 * phi.degree + phi.dim) + max_shift;
  if (reach < need)
    throw std::invalid_argument("translate_quadrature: grid does not cover the shifted support");
  const QuadGrid grid = build_quad_grid(Q, phi.dim);
  const auto values = synthesize_on_grid_shifted(phi, grid, x);
  HermiteCoeffs out = project_values(values, grid, phi.degree);
  out.real_valued = phi.real_valued;
  return out;
}

std::vector<std::vector<double>> spread_directions(int d, int count) {
  if (count < 1) throw std::invalid_argument("spread_directions: count must be >= 1");
  std::vector<std::vector<double>> dirs;
  if (d == 1) {
    dirs.push_back({1.0});
    if (count > 1) dirs.push_back({-1.0});
    return dirs;
  }
  if (d == 2) {
    for (int i = 0; i < count; ++i) {
      const double a = 2.0 * M_PI * i / count;
      dirs.push_back({std::cos(a), std::sin(a)});
    }
    return dirs;
  }
  if (d == 3) {
    // Fibonacci sphere
    const double golden = M_PI * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - 2.0 * (i + 0.5) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double a = golden * i;
      dirs.push_back({r * std::cos(a), r * std::sin(a), z});
    }
    return dirs;
  }
  throw std::invalid_argument("spread_directions: directions provided for d <= 3 only");
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("loglog_slope: need at least two points");
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  const double n = static_cast<double>(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  const double denom = n * sxx - sx * sx;
  if (denom == 0.0) throw std::invalid_argument("loglog_slope: degenerate abscissae");
  return (n * sxy - sx * sy) / denom;
}

namespace {

template <bool Parallel>
TranslationReport scan_impl(const HermiteCoeffs& phi, double p, std::span<const double> radii,
                            int n_directions) {
  const double base = sobolev_norm(phi, p);
  if (base == 0.0) throw std::invalid_argument("norm_bound_scan: zero-norm input");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (radii[i] <= radii[i - 1])
      throw std::invalid_argument("norm_bound_scan: radii must be strictly increasing");

  const auto dirs = spread_directions(phi.dim, n_directions);
  const Basis basis(phi.dim, phi.degree);

  TranslationReport rep;
  rep.p = p;
  rep.d = phi.dim;
  rep.N = phi.degree;
  rep.degree_bound = 2 * (static_cast<int>(std::floor(std::abs(p))) + 1);
  rep.radii.assign(radii.begin(), radii.end());
  rep.ratios.assign(radii.size(), 0.0);

  const std::size_t jobs = radii.size() * dirs.size();
  std::vector<double> norms(jobs, 0.0);
#pragma omp parallel for schedule(static) if (Parallel)
  for (std::size_t job = 0; job < jobs; ++job) {
    const std::size_t ir = job / dirs.size();
    const std::size_t id = job % dirs.size();
    std::vector<double> shift(dirs[id]);
    for (auto& v : shift) v *= radii[ir];
    norms[job] = sobolev_norm(translate_expm(basis, phi, shift), p);
  }
  // merged in input order, independent of scheduling
  for (std::size_t ir = 0; ir < radii.size(); ++ir) {
    double best = 0.0;
    for (std::size_t id = 0; id < dirs.size(); ++id)
      best = std::max(best, norms[ir * dirs.size() + id]);
    rep.ratios[ir] = best / base;
  }

  // fit on the largest decade of radii
  const double rmax = rep.radii.back();
  std::vector<double> fx, fy;
  for (std::size_t i = 0; i < rep.radii.size(); ++i) {
    if (rep.radii[i] >= 0.1 * rmax) {
      fx.push_back(rep.radii[i]);
      fy.push_back(std::max(rep.ratios[i], 1e-300));
    }
  }
  rep.slope = loglog_slope(fx, fy);
  return rep;
}

}  // namespace

TranslationReport norm_bound_scan(const HermiteCoeffs& phi, double p,
                                  std::span<const double> radii, int n_directions) {
  return scan_impl<true>(phi, p, radii, n_directions);
}

TranslationReport norm_bound_scan_serial(const HermiteCoeffs& phi, double p,
                                         std::span<const double> radii, int n_directions) {
  return scan_impl<false>(phi, p, radii, n_directions);
}

}  // namespace hheat
