#include <doctest.h>

#include <cmath>
#include <vector>

#include "hheat/coeffs.hpp"
#include "hheat/hermite.hpp"
#include "hheat/multi_index.hpp"
#include "hheat/projection.hpp"
#include "hheat/quadrature.hpp"

using namespace hheat;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("enumeration is graded, deterministic, and counted by C(N+d,d)") {
  const auto one_d = enumerate_indices(1, 3);
  REQUIRE(one_d.size() == 4);
  CHECK(one_d[0] == MultiIndex{0});
  CHECK(one_d[1] == MultiIndex{1});
  CHECK(one_d[2] == MultiIndex{2});
  CHECK(one_d[3] == MultiIndex{3});

  const auto two_d = enumerate_indices(2, 2);
  REQUIRE(two_d.size() == 6);  // C(4,2)
  CHECK(two_d == std::vector<MultiIndex>{{0, 0}, {0, 1}, {1, 0}, {0, 2}, {1, 1}, {2, 0}});

  CHECK(enumerate_indices(3, 0) == std::vector<MultiIndex>{{0, 0, 0}});

  for (int d : {1, 2, 3}) {
    for (int N : {0, 1, 5, 9}) {
      CHECK(enumerate_indices(d, N).size() == static_cast<std::size_t>(index_count(d, N)));
    }
  }
}

TEST_CASE("enumeration for N is a prefix of enumeration for N+1") {
  for (int d : {1, 2, 3}) {
    const auto small = enumerate_indices(d, 4);
    const auto big = enumerate_indices(d, 5);
    REQUIRE(big.size() > small.size());
    for (std::size_t i = 0; i < small.size(); ++i) CHECK(big[i] == small[i]);
  }
}

TEST_CASE("enumeration rejects invalid shapes") {
  CHECK_THROWS_AS(enumerate_indices(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_indices(1, -1), std::invalid_argument);
  CHECK_THROWS_AS(index_count(-2, 3), std::invalid_argument);
}

TEST_CASE("1-D Hermite function values") {
  CHECK(hermite_eval_1d(0, 0.0) == doctest::Approx(0.7511255444649425).epsilon(1e-15));
  CHECK(hermite_eval_1d(1, 0.0) == 0.0);

  // direct closed form with H_2(s) = 4s^2 - 2 as an independent route
  const double s = 1.0;
  const double direct = std::pow(std::sqrt(kPi) * 4.0 * 2.0, -0.5) * std::exp(-0.5 * s * s) *
                        (4.0 * s * s - 2.0);
  CHECK(hermite_eval_1d(2, s) == doctest::Approx(direct).epsilon(1e-14));
}

TEST_CASE("uniform bound |h_l| <= 1 and parity") {
  const auto grid = build_quad_grid(48);
  for (int l : {0, 1, 3, 10, 31}) {
    for (double s : grid.nodes) {
      CHECK(std::abs(hermite_eval_1d(l, s)) <= 1.0 + 1e-12);
      const double sign = (l % 2 == 0) ? 1.0 : -1.0;
      CHECK(hermite_eval_1d(l, -s) == doctest::Approx(sign * hermite_eval_1d(l, s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("recurrence agrees with the raise identity via finite differences") {
  // (x - d/dx) h_l = sqrt(2(l+1)) h_{l+1}, derivative from central differences
  const double eps = 1e-6;
  for (int l : {0, 1, 4, 9}) {
    for (double x : {-1.3, 0.2, 0.9, 2.1}) {
      const double fd = (hermite_eval_1d(l, x + eps) - hermite_eval_1d(l, x - eps)) / (2 * eps);
      const double raised = x * hermite_eval_1d(l, x) - fd;
      CHECK(raised ==
            doctest::Approx(std::sqrt(2.0 * (l + 1)) * hermite_eval_1d(l + 1, x)).epsilon(1e-6));
    }
  }
}

TEST_CASE("tensor evaluation is the product of 1-D factors") {
  CHECK(hermite_eval_nd({0, 0}, std::vector<double>{0.0, 0.0}) ==
        doctest::Approx(1.0 / std::sqrt(kPi)).epsilon(1e-15));
  for (double a : {-2.0, 0.0, 1.5})
    CHECK(hermite_eval_nd({1, 0}, std::vector<double>{0.0, a}) == 0.0);

  for (double x1 : {-0.7, 0.4}) {
    for (double x2 : {0.1, 1.9}) {
      CHECK(hermite_eval_nd({2, 3}, std::vector<double>{x1, x2}) ==
            doctest::Approx(hermite_eval_1d(2, x1) * hermite_eval_1d(3, x2)).epsilon(1e-14));
    }
  }
  CHECK_THROWS_AS(hermite_eval_nd({1, 2}, std::vector<double>{0.0}), std::invalid_argument);
}

TEST_CASE("quadrature: degenerate rule, moments, orthonormality") {
  const auto g1 = build_quad_grid(1);
  REQUIRE(g1.q == 1);
  CHECK(g1.nodes[0] == 0.0);
  CHECK(g1.weights[0] == doctest::Approx(std::sqrt(kPi)).epsilon(1e-15));

  const auto g20 = build_quad_grid(20);
  double m0 = 0.0, m2 = 0.0;
  for (int i = 0; i < g20.q; ++i) {
    const double y = g20.nodes[i];
    const double gauss = std::exp(-y * y);
    m0 += g20.weights[i] * gauss;
    m2 += g20.weights[i] * y * y * gauss;
  }
  CHECK(m0 == doctest::Approx(std::sqrt(kPi)).epsilon(1e-13));
  CHECK(m2 == doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-13));

  const auto g40 = build_quad_grid(40);
  double worst = 0.0;
  for (int j = 0; j <= 30; ++j) {
    for (int k = j; k <= 30; ++k) {
      double s = 0.0;
      for (int i = 0; i < g40.q; ++i)
        s += g40.weights[i] * hermite_eval_1d(j, g40.nodes[i]) * hermite_eval_1d(k, g40.nodes[i]);
      worst = std::max(worst, std::abs(s - (j == k ? 1.0 : 0.0)));
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("quadrature nodes increase, weights positive, ceiling enforced") {
  for (int q : {2, 7, 64, 512}) {
    const auto g = build_quad_grid(q);
    for (int i = 0; i < q; ++i) CHECK(g.weights[i] > 0.0);
    for (int i = 1; i < q; ++i) CHECK(g.nodes[i] > g.nodes[i - 1]);
  }
  CHECK_THROWS_AS(build_quad_grid(0), std::invalid_argument);
  CHECK_THROWS_AS(build_quad_grid(513), std::invalid_argument);
}

TEST_CASE("projection recovers basis elements and linear combinations") {
  const auto e3 = project_function(
      [](std::span<const double> x) { return hermite_eval_1d(3, x[0]); }, 1, 8, 40);
  for (std::size_t i = 0; i < e3.size(); ++i) {
    const double want = (i == 3) ? 1.0 : 0.0;
    CHECK(std::abs(e3.c[i] - cdouble{want, 0.0}) <= 1e-10);
  }

  const auto zero = project_function([](std::span<const double>) { return 0.0; }, 1, 8, 40);
  CHECK(l2_norm(zero) == 0.0);

  const auto combo = project_function(
      [](std::span<const double> x) {
        return hermite_eval_1d(0, x[0]) + 2.0 * hermite_eval_1d(2, x[0]);
      },
      1, 8, 40);
  CHECK(std::abs(combo.c[0] - cdouble{1.0, 0.0}) <= 1e-10);
  CHECK(std::abs(combo.c[2] - cdouble{2.0, 0.0}) <= 1e-10);
  CHECK(std::abs(combo.c[1]) <= 1e-10);

  CHECK_THROWS_AS(project_function([](std::span<const double>) { return std::nan(""); }, 1, 4, 40),
                  std::domain_error);
  // Q-rule floor: N = 8 needs Q >= 32
  CHECK_THROWS_AS(project_function([](std::span<const double>) { return 0.0; }, 1, 8, 24),
                  std::invalid_argument);
}

TEST_CASE("synthesize: point values and projection round-trip") {
  const auto e0 = HermiteCoeffs::basis_vector(1, 8, {0});
  CHECK(synthesize(e0, std::vector<double>{0.0}).real() ==
        doctest::Approx(0.7511255444649425).epsilon(1e-15));
  CHECK(l2_norm(HermiteCoeffs::zero(2, 4)) == 0.0);

  // round-trip at N = 16, Q = 64: project(synthesize(phi)) == phi
  HermiteCoeffs phi(1, 16);
  for (std::size_t i = 0; i < phi.size(); ++i)
    phi.c[i] = cdouble{std::cos(1.7 * static_cast<double>(i)), 0.0};
  const auto back = project_function(
      [&phi](std::span<const double> x) { return synthesize(phi, x).real(); }, 1, 16, 64);
  CHECK(max_abs_diff(phi, back) <= 1e-10);
}

TEST_CASE("projection works in two dimensions") {
  const auto f = [](std::span<const double> x) {
    return hermite_eval_1d(1, x[0]) * hermite_eval_1d(2, x[1]);
  };
  const auto proj = project_function(f, 2, 5, 32);
  const auto indices = enumerate_indices(2, 5);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    const double want = (indices[i] == MultiIndex{1, 2}) ? 1.0 : 0.0;
    CHECK(std::abs(proj.c[i] - cdouble{want, 0.0}) <= 1e-10);
  }
}
