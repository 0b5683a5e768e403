#include <doctest.h>

#include <cmath>
#include <vector>

#include "hheat/brownian.hpp"
#include "hheat/coeffs.hpp"
#include "hheat/ensembles.hpp"
#include "hheat/heat.hpp"
#include "hheat/ito.hpp"
#include "hheat/monotonicity.hpp"
#include "hheat/monte_carlo.hpp"
#include "hheat/rng.hpp"
#include "hheat/sobolev.hpp"

using namespace hheat;

TEST_CASE("brownian sampling is bit-reproducible and validates inputs") {
  const auto a = sample_brownian(2, 1.0, 64, 99);
  const auto b = sample_brownian(2, 1.0, 64, 99);
  CHECK(a.positions == b.positions);
  CHECK(a.times == b.times);
  CHECK(a.at(0)[0] == 0.0);
  CHECK(a.at(0)[1] == 0.0);
  for (std::size_t i = 1; i < a.times.size(); ++i) CHECK(a.times[i] > a.times[i - 1]);

  CHECK_THROWS_AS(sample_brownian(0, 1.0, 8, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_brownian(1, 0.0, 8, 1), std::invalid_argument);
  CHECK_THROWS_AS(sample_brownian(1, 1.0, 0, 1), std::invalid_argument);
}

TEST_CASE("terminal statistics match the CLT and chi-square concentration") {
  const double T = 1.0;
  const int M = 10000;
  double mean = 0.0;
  for (int m = 0; m < M; ++m) {
    const auto path = sample_brownian(1, T, 1, 1000 + m);
    mean += path.at(1)[0];
  }
  mean /= M;
  CHECK(std::abs(mean) <= 3.0 * std::sqrt(T / M));

  // realized quadratic variation of one fine path
  const int n = 20000;
  const auto path = sample_brownian(1, T, n, 4242);
  const auto cov = realized_covariation(path);
  CHECK(cov.back() == doctest::Approx(T).epsilon(3.0 * std::sqrt(2.0 * T / n)));
}

TEST_CASE("drift shifts the terminal mean") {
  const std::vector<double> b{1.5};
  double mean = 0.0;
  const int M = 4000;
  for (int m = 0; m < M; ++m) mean += sample_brownian(1, 1.0, 4, 7000 + m, b).at(4)[0];
  mean /= M;
  CHECK(mean == doctest::Approx(1.5).epsilon(0.1));
}

TEST_CASE("realized covariation: deterministic paths vanish, axes decouple") {
  // linear path: X_t = v t sampled on n steps has covariation v^2 T^2 / n -> 0
  for (int n : {16, 64, 256}) {
    BrownianPath path;
    path.dim = 1;
    path.times.resize(n + 1);
    path.positions.resize(n + 1);
    for (int i = 0; i <= n; ++i) {
      path.times[i] = static_cast<double>(i) / n;
      path.positions[i] = 2.0 * path.times[i];
    }
    const auto cov = realized_covariation(path);
    CHECK(cov.back() == doctest::Approx(4.0 / n).epsilon(1e-12));
  }

  const auto path2 = sample_brownian(2, 1.0, 20000, 77);
  const auto cov2 = realized_covariation(path2);
  const double off = cov2[cov2.size() - 3];  // entry (n, 0, 1)
  CHECK(std::abs(off) <= 3.0 * std::sqrt(2.0 / 20000.0));
}

TEST_CASE("coarsening keeps endpoints and validates the factor") {
  const auto fine = sample_brownian(1, 1.0, 64, 5);
  const auto coarse = coarsen(fine, 8);
  CHECK(coarse.steps() == 8);
  CHECK(coarse.positions.front() == fine.positions.front());
  CHECK(coarse.positions.back() == fine.positions.back());
  CHECK_THROWS_AS(coarsen(fine, 7), std::invalid_argument);
}

TEST_CASE("mc expectation: degenerate time, reproducibility, heat bridge") {
  const auto e0 = HermiteCoeffs::basis_vector(1, 48, {0});

  const auto at_zero = mc_expectation(e0, 0.0, 100, 3);
  CHECK(max_abs_diff(at_zero.mean, e0) == 0.0);
  for (double se : at_zero.std_error) CHECK(se == 0.0);

  const auto a = mc_expectation(e0, 0.5, 2000, 11);
  const auto b = mc_expectation(e0, 0.5, 2000, 11);
  CHECK(a.mean.c == b.mean.c);
  CHECK(a.std_error == b.std_error);

  // E tau_{X_t} phi = T_t phi within 3 aggregate standard errors
  const auto est = mc_expectation(e0, 0.5, 20000, 7);
  const auto ref = heat_apply(e0, 0.5);
  CHECK(l2_norm(est.mean - ref) <= 3.0 * est.aggregate_se());
  // and coefficient-wise, above the deterministic route's rounding floor
  for (std::size_t k = 0; k < est.mean.size(); ++k)
    CHECK(std::abs(est.mean.c[k] - ref.c[k]) <= 3.0 * est.std_error[k] + 1e-12);

  CHECK_THROWS_AS(mc_expectation(e0, -0.5, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(mc_expectation(e0, 0.5, 0, 1), std::invalid_argument);
}

TEST_CASE("standard errors shrink like the square root of the sample count") {
  const auto e0 = HermiteCoeffs::basis_vector(1, 32, {0});
  const auto small = mc_expectation(e0, 0.5, 5000, 19);
  const auto big = mc_expectation(e0, 0.5, 10000, 19);
  const double ratio = small.aggregate_se() / big.aggregate_se();
  CHECK(ratio == doctest::Approx(std::sqrt(2.0)).epsilon(0.15));
}

TEST_CASE("ito residual: zero path gives an exactly zero residual") {
  const auto phi = random_coeffs(1, 24, 6, 23);
  BrownianPath still;
  still.dim = 1;
  still.times = {0.0, 0.25, 0.5, 0.75, 1.0};
  still.positions.assign(5, 0.0);
  const auto rep = ito_residual(phi, still, 0.0);
  for (double r : rep.residual_norms) CHECK(r == 0.0);
  CHECK(rep.terminal_residual == 0.0);
}

TEST_CASE("ito residual validates margins and dimensions") {
  const auto full = random_coeffs(1, 16, 16, 29);  // no derivative margin
  const auto path = sample_brownian(1, 1.0, 8, 3);
  CHECK_THROWS_AS(ito_residual(full, path, 0.0), std::invalid_argument);

  const auto phi = random_coeffs(2, 8, 2, 31);
  CHECK_THROWS_AS(ito_residual(phi, path, 0.0), std::invalid_argument);
}

TEST_CASE("ito residual starts at zero and converges at order one half") {
  const auto e0 = HermiteCoeffs::basis_vector(1, 32, {0});
  const auto rep = ito_convergence_study(e0, 1.0, 6, 12, 8, 42, 0.0);
  CHECK(rep.order == doctest::Approx(0.5).epsilon(0.4));  // 0.5 +/- 0.2
  // step sizes shrink with the index; residuals follow, up to 20% slack
  for (std::size_t i = 1; i < rep.mean_terminal.size(); ++i) {
    CHECK(rep.step_sizes[i] < rep.step_sizes[i - 1]);
    CHECK(rep.mean_terminal[i] <= 1.2 * rep.mean_terminal[i - 1]);
  }
}

TEST_CASE("drifted paths still converge, using realized covariation") {
  const auto e0 = HermiteCoeffs::basis_vector(1, 32, {0});
  const std::vector<double> b{0.5};
  double prev = 0.0;
  for (int level : {7, 9, 11}) {
    const auto path = sample_brownian(1, 1.0, 1 << level, 17, b);
    const auto rep = ito_residual(e0, path, 0.0);
    CHECK(rep.used_realized_covariation);
    if (prev > 0.0) CHECK(rep.terminal_residual < prev);
    prev = rep.terminal_residual;
  }
}

TEST_CASE("stochastic integral of a constant path is exactly zero") {
  const auto phi = random_coeffs(1, 16, 4, 37);
  BrownianPath still;
  still.dim = 1;
  still.times = {0.0, 0.5, 1.0};
  still.positions.assign(3, 0.0);
  CHECK(l2_norm(stochastic_integral_term(phi, still)) == 0.0);
}

TEST_CASE("martingale check: mean within three standard errors, isometry holds") {
  const auto e0 = HermiteCoeffs::basis_vector(1, 32, {0});
  const auto rep = martingale_check(e0, 0.5, 4000, 31, 0.0, 16);
  CHECK(rep.mean_within_3se());
  CHECK(rep.isometry_mc ==
        doctest::Approx(rep.isometry_predicted).epsilon(0.2));
}

TEST_CASE("sde solution probe: residual shrinks and the energy is stable") {
  const auto e0 = HermiteCoeffs::basis_vector(1, 32, {0});
  const auto rep = sde_solution_check(e0, 1.0, 1.0, 2000, 5);
  CHECK(rep.residual_checked);
  CHECK(rep.residual_terminal.front() > rep.residual_terminal.back());
  CHECK(std::isfinite(rep.energy_full));
  CHECK(rep.rel_change <= 0.05);

  // T = 0 is degenerate: Y_0 = phi by construction, nothing to run
  const auto degenerate = sde_solution_check(e0, 1.0, 0.0, 100, 5);
  CHECK(degenerate.energy_full == 0.0);
  CHECK_FALSE(degenerate.residual_checked);
}

TEST_CASE("sde energy check accepts full-content inputs (deltas)") {
  const auto d0 = delta_coeffs(std::vector<double>{0.0}, 1, 48);
  const auto rep = sde_solution_check(d0, 1.0, 1.0, 2000, 5);
  CHECK_FALSE(rep.residual_checked);  // no derivative margin for a delta
  CHECK(std::isfinite(rep.energy_full));
  CHECK(rep.rel_change <= 0.05);
}

TEST_CASE("monotonicity ratio: closed form on the ground state, homogeneity") {
  const auto e0 = HermiteCoeffs::basis_vector(1, 8, {0});
  // 2 <(1/2) d^2 e0, e0>_{-2} = -1/2,  ||d e0||^2_{-2} = (1/2) 3^{-4}
  CHECK(monotonicity_ratio(e0, -1.0) ==
        doctest::Approx(-0.5 + 1.0 / 162.0).epsilon(1e-14));

  auto scaled = e0;
  scaled *= cdouble{17.0, 0.0};
  CHECK(monotonicity_ratio(scaled, -1.0) ==
        doctest::Approx(monotonicity_ratio(e0, -1.0)).epsilon(1e-14));

  CHECK_THROWS_AS(monotonicity_ratio(HermiteCoeffs::zero(1, 8), -1.0), std::invalid_argument);
}

TEST_CASE("monotonicity scan: bounded and stable across truncations") {
  CHECK_THROWS_AS(monotonicity_scan(0.5, 10, 1, 16, 1), std::invalid_argument);

  std::vector<double> maxima;
  for (int N : {16, 32, 64}) {
    const auto rep = monotonicity_scan(-1.0, 50, 1, N, 2024);
    CHECK(rep.ratios.size() == 50);
    CHECK(std::isfinite(rep.max_ratio));
    maxima.push_back(rep.max_ratio);
  }
  const double mean = (maxima[0] + maxima[1] + maxima[2]) / 3.0;
  for (double m : maxima) CHECK(std::abs(m - mean) <= 0.10 * std::abs(mean));
}

TEST_CASE("rng streams are decorrelated across indices") {
  Rng a = stream_rng(5, 0);
  Rng b = stream_rng(5, 1);
  int equal = 0;
  for (int i = 0; i < 64; ++i)
    if (a.next_u64() == b.next_u64()) ++equal;
  CHECK(equal == 0);

  // gaussians have roughly unit variance over a long stream
  Rng g = stream_rng(5, 2);
  double s = 0.0, s2 = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double z = g.next_gaussian();
    s += z;
    s2 += z * z;
  }
  CHECK(std::abs(s / n) <= 3.0 / std::sqrt(static_cast<double>(n)));
  CHECK(s2 / n == doctest::Approx(1.0).epsilon(0.05));
}
