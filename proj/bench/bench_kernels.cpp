// Timings of the OpenMP kernels against their serial references, with a
// bitwise-equality check on every pair. Usage: bench_kernels [--quick]

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "hheat/coeffs.hpp"
#include "hheat/ensembles.hpp"
#include "hheat/ito.hpp"
#include "hheat/monte_carlo.hpp"
#include "hheat/projection.hpp"
#include "hheat/quadrature.hpp"
#include "hheat/translation.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace hheat;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void row(const char* kernel, double serial_ms, double parallel_ms, bool identical) {
  std::printf("%-28s %10.1f %10.1f %8.2fx   %s\n", kernel, serial_ms, parallel_ms,
              serial_ms / parallel_ms, identical ? "bit-identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;

#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (OpenMP disabled)\n");
#endif
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial/ms", "omp/ms", "speedup");

  {  // projection, d = 2
    const int N = quick ? 16 : 28;
    const int Q = 2 * N + 16;
    const auto f = [](std::span<const double> x) {
      return std::exp(-0.37 * (x[0] * x[0] + x[1] * x[1])) * (1.0 + x[0] * x[1]);
    };
    auto t0 = clock_type::now();
    const auto ser = project_function_serial(f, 2, N, Q);
    const double sm = ms_since(t0);
    t0 = clock_type::now();
    const auto par = project_function(f, 2, N, Q);
    row("project_function d=2", sm, ms_since(t0), ser.c == par.c);
  }

  {  // grid synthesis, d = 2
    const int N = quick ? 16 : 28;
    const auto phi = random_coeffs_complex(2, N, N, 5);
    const auto grid = build_quad_grid(2 * N + 16, 2);
    auto t0 = clock_type::now();
    const auto ser = synthesize_on_grid_serial(phi, grid);
    const double sm = ms_since(t0);
    t0 = clock_type::now();
    const auto par = synthesize_on_grid(phi, grid);
    row("synthesize_on_grid d=2", sm, ms_since(t0), ser == par);
  }

  {  // Monte Carlo translate averaging
    const std::uint64_t M = quick ? 5000 : 40000;
    const auto e0 = HermiteCoeffs::basis_vector(1, 48, {0});
    auto t0 = clock_type::now();
    const auto ser = mc_expectation_serial(e0, 0.5, M, 7);
    const double sm = ms_since(t0);
    t0 = clock_type::now();
    const auto par = mc_expectation(e0, 0.5, M, 7);
    row("mc_expectation N=48", sm, ms_since(t0),
        ser.mean.c == par.mean.c && ser.std_error == par.std_error);
  }

  {  // martingale Monte Carlo over paths
    const std::uint64_t M = quick ? 500 : 4000;
    const auto e0 = HermiteCoeffs::basis_vector(1, 32, {0});
    auto t0 = clock_type::now();
    const auto ser = martingale_check_serial(e0, 0.5, M, 9, 0.0, 16);
    const double sm = ms_since(t0);
    t0 = clock_type::now();
    const auto par = martingale_check(e0, 0.5, M, 9, 0.0, 16);
    row("martingale_check", sm, ms_since(t0),
        ser.mean_norm == par.mean_norm && ser.isometry_mc == par.isometry_mc);
  }

  {  // translation-bound scan
    const auto e0 = HermiteCoeffs::basis_vector(2, quick ? 16 : 24, {0, 0});
    std::vector<double> radii;
    for (double r = 0.25; r <= 2.6; r *= 1.3) radii.push_back(r);
    auto t0 = clock_type::now();
    const auto ser = norm_bound_scan_serial(e0, 1.0, radii, 16);
    const double sm = ms_since(t0);
    t0 = clock_type::now();
    const auto par = norm_bound_scan(e0, 1.0, radii, 16);
    row("norm_bound_scan d=2", sm, ms_since(t0), ser.ratios == par.ratios);
  }

  return 0;
}
