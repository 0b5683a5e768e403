#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <map>
#include <string>

#include "hheat/ensembles.hpp"
#include "hheat/heat.hpp"
#include "hheat/io.hpp"
#include "hheat/ito.hpp"
#include "hheat/monotonicity.hpp"
#include "hheat/monte_carlo.hpp"
#include "hheat/quadrature.hpp"
#include "hheat/sobolev.hpp"
#include "hheat/translation.hpp"
#include "hheat/version.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hheat::cli {

namespace fs = std::filesystem;

namespace {

class Timings {
 public:
  void start(const std::string& phase) {
    phase_ = phase;
    t0_ = std::chrono::steady_clock::now();
  }
  void stop() {
    const auto dt = std::chrono::steady_clock::now() - t0_;
    doc_[phase_] = std::chrono::duration<double, std::milli>(dt).count();
  }
  const json& doc() const { return doc_; }

 private:
  json doc_ = json::object();
  std::string phase_;
  std::chrono::steady_clock::time_point t0_;
};

struct Bundle {
  fs::path dir;
  Timings timings;
  json failures = json::array();

  explicit Bundle(const RunConfig& cfg) : dir(cfg.out_dir()) {
    fs::create_directories(dir / "coefficients");
    write_json_file(cfg.doc(), dir / "config.json");
  }

  void fail(const std::string& what, const json& detail = json::object()) {
    json f = detail;
    f["assertion"] = what;
    failures.push_back(f);
  }

  int finish(json& report) {
    report["failures"] = failures;
    report["pass"] = failures.empty();
    report["version"] = kVersion;
    write_json_file(report, dir / "report.json");
    write_json_file(timings.doc(), dir / "timings.json");
    return failures.empty() ? 0 : 1;
  }
};

json echo_of(const RunConfig& cfg) { return cfg.doc(); }

HermiteCoeffs solve_one(const RunConfig& cfg, const std::string& method,
                        const HermiteCoeffs& phi, double t, MCEstimate* mc_out) {
  if (method == "spectral") return heat_apply(phi, t, cfg.Q());
  if (method == "conv-reference")
    return t == 0.0 ? phi : convolution_reference(phi, t, cfg.Q());
  if (method == "mc") {
    MCEstimate est = mc_expectation(phi, t, cfg.samples(), cfg.seed());
    if (mc_out != nullptr) *mc_out = est;
    return est.mean;
  }
  throw std::invalid_argument("unknown method '" + method + "'");
}

std::string time_tag(std::size_t idx) { return "t" + std::to_string(idx); }

}  // namespace

CommandResult cmd_build(const RunConfig& cfg) {
  Bundle bundle(cfg);
  bundle.timings.start("build");
  const HermiteCoeffs phi = cfg.build_input();
  bundle.timings.stop();

  const fs::path file = bundle.dir / "coefficients" / "input.json";
  save_coeffs(phi, file);

  json report{{"kind", "build"},
              {"input", cfg.input()},
              {"d", phi.dim},
              {"N", phi.degree},
              {"coefficient_file", file.string()},
              {"norm_l2", l2_norm(phi)},
              {"config", echo_of(cfg)}};
  CommandResult res;
  res.exit_code = bundle.finish(report);
  res.report = std::move(report);
  return res;
}

CommandResult cmd_solve(const RunConfig& cfg) {
  Bundle bundle(cfg);
  bundle.timings.start("input");
  const HermiteCoeffs phi = cfg.build_input();
  bundle.timings.stop();

  std::vector<double> times = cfg.t_grid();
  if (times.empty()) times.push_back(cfg.t());
  const std::vector<std::string> methods =
      cfg.compare() ? cfg.methods() : std::vector<std::string>{cfg.method()};

  json report{{"kind", "solve"}, {"times", times}, {"methods", methods}};
  json norms = json::object();
  std::map<std::string, std::vector<HermiteCoeffs>> solutions;
  std::vector<double> mc_se(times.size(), 0.0);  // per-time aggregate SE

  for (const auto& method : methods) {
    bundle.timings.start("solve:" + method);
    std::vector<HermiteCoeffs> sols;
    json method_norms = json::array();
    std::uint64_t outside = 0;
    for (std::size_t i = 0; i < times.size(); ++i) {
      MCEstimate est;
      HermiteCoeffs sol = solve_one(cfg, method, phi, times[i], &est);
      save_coeffs(sol, bundle.dir / "coefficients" / (method + "_" + time_tag(i) + ".json"));
      method_norms.push_back(sobolev_norm(sol, cfg.p()));
      if (method == "mc") {
        mc_se[i] = est.aggregate_se();
        outside += est.outside_envelope;
        write_json_file(json{{"t", times[i]}, {"std_error", est.std_error}},
                        bundle.dir / "coefficients" / (method + "_" + time_tag(i) + "_se.json"));
      }
      sols.push_back(std::move(sol));
    }
    bundle.timings.stop();
    norms[method] = method_norms;
    solutions[method] = std::move(sols);
    if (method == "mc")
      report["mc"] = {{"aggregate_se", mc_se},
                      {"samples", cfg.samples()},
                      {"seed", cfg.seed()},
                      {"outside_envelope_draws", outside}};
  }
  report["norms_p"] = norms;

  if (cfg.compare() && methods.size() > 1) {
    json distances = json::object();
    for (std::size_t a = 0; a < methods.size(); ++a) {
      for (std::size_t b = a + 1; b < methods.size(); ++b) {
        const bool has_mc = methods[a] == "mc" || methods[b] == "mc";
        const std::string key = methods[a] + "|" + methods[b];
        json per_time = json::array();
        for (std::size_t i = 0; i < times.size(); ++i) {
          const double dist =
              sobolev_norm(solutions[methods[a]][i] - solutions[methods[b]][i], 0.0);
          per_time.push_back(dist);
          const double gate = has_mc ? cfg.threshold("mc_sigma") * mc_se[i]
                                     : cfg.threshold("cross_method_distance");
          if (dist > gate)
            bundle.fail("method distance " + key + " at t index " + std::to_string(i),
                        {{"distance", dist}, {"gate", gate}});
        }
        distances[key] = per_time;
      }
    }
    report["distances"] = distances;
  }

  report["config"] = echo_of(cfg);
  CommandResult res;
  res.exit_code = bundle.finish(report);
  res.report = std::move(report);
  return res;
}

namespace {

CommandResult scan_translation(const RunConfig& cfg, Bundle& bundle) {
  const HermiteCoeffs phi = cfg.build_input();
  std::vector<double> radii = cfg.radii();
  if (radii.empty()) {
    const double env = envelope_radius(cfg.N());
    radii = log_grid(env / 16.0, 0.9 * env, 12);
  }
  bundle.timings.start("scan");
  const TranslationReport rep = norm_bound_scan(phi, cfg.p(), radii, cfg.directions());
  bundle.timings.stop();

  const double gate = rep.degree_bound + cfg.threshold("translation_slope_slack");
  if (!(rep.slope <= gate))
    bundle.fail("translation growth exponent within degree bound",
                {{"slope", rep.slope}, {"gate", gate}});

  json report = report_to_json(rep, echo_of(cfg));
  write_csv(bundle.dir / "translation_scan.csv", {"radius", "ratio"}, {rep.radii, rep.ratios});
  CommandResult res;
  res.exit_code = bundle.finish(report);
  res.report = std::move(report);
  return res;
}

CommandResult scan_continuity(const RunConfig& cfg, Bundle& bundle) {
  const HermiteCoeffs phi = cfg.build_input();
  std::vector<double> grid = cfg.t_grid();
  if (grid.empty()) grid = log_grid(1e-3, 1e-1, 12);
  bundle.timings.start("scan");
  const ContinuityReport rep = strong_continuity_scan(phi, cfg.p(), grid);
  bundle.timings.stop();

  const double lo = cfg.threshold("continuity_slope_min");
  const double hi = cfg.threshold("continuity_slope_max");
  if (!(rep.slope >= lo && rep.slope <= hi))
    bundle.fail("strong-continuity slope in band",
                {{"slope", rep.slope}, {"band", {lo, hi}}});

  json report = report_to_json(rep, echo_of(cfg));
  write_csv(bundle.dir / "continuity_scan.csv", {"t", "deviation"},
            {rep.t_grid, rep.deviations});
  CommandResult res;
  res.exit_code = bundle.finish(report);
  res.report = std::move(report);
  return res;
}

CommandResult scan_monotonicity(const RunConfig& cfg, Bundle& bundle) {
  const auto Ns = cfg.N_list();
  bundle.timings.start("scan");
  std::vector<double> maxima;
  json per_n = json::array();
  for (int n : Ns) {
    const MonotonicityReport rep = monotonicity_scan(cfg.p(), cfg.ensemble(), cfg.d(), n,
                                                     cfg.seed());
    maxima.push_back(rep.max_ratio);
    per_n.push_back(report_to_json(rep, json::object()));
  }
  bundle.timings.stop();

  double lo = maxima[0], hi = maxima[0], mean = 0.0;
  for (double m : maxima) {
    lo = std::min(lo, m);
    hi = std::max(hi, m);
    mean += m;
  }
  mean /= static_cast<double>(maxima.size());
  const double stability = cfg.threshold("monotonicity_stability");
  bool stable = true;
  for (double m : maxima) stable = stable && std::abs(m - mean) <= stability * std::abs(mean);
  if (!std::isfinite(hi) || !stable)
    bundle.fail("monotonicity constant bounded and stable across N",
                {{"maxima", maxima}, {"stability", stability}});

  json report{{"kind", "monotonicity"},
              {"p", cfg.p()},
              {"N_list", Ns},
              {"maxima", maxima},
              {"per_N", per_n},
              {"config", echo_of(cfg)}};
  std::vector<double> n_as_double(Ns.begin(), Ns.end());
  write_csv(bundle.dir / "monotonicity_scan.csv", {"N", "max_ratio"}, {n_as_double, maxima});
  CommandResult res;
  res.exit_code = bundle.finish(report);
  res.report = std::move(report);
  return res;
}

CommandResult scan_ito(const RunConfig& cfg, Bundle& bundle) {
  const HermiteCoeffs phi = cfg.build_input();
  bundle.timings.start("scan");
  const ItoConvergenceReport rep = ito_convergence_study(
      phi, cfg.t(), cfg.level_min(), cfg.level_max(), cfg.paths(), cfg.seed(), cfg.p());
  bundle.timings.stop();

  const double lo = cfg.threshold("ito_order_min");
  const double hi = cfg.threshold("ito_order_max");
  if (!(rep.order >= lo && rep.order <= hi))
    bundle.fail("ito residual order in band", {{"order", rep.order}, {"band", {lo, hi}}});

  json report = report_to_json(rep, echo_of(cfg));
  write_csv(bundle.dir / "ito_scan.csv", {"h", "mean_terminal_residual"},
            {rep.step_sizes, rep.mean_terminal});
  CommandResult res;
  res.exit_code = bundle.finish(report);
  res.report = std::move(report);
  return res;
}

}  // namespace

CommandResult cmd_scan(const std::string& kind, const RunConfig& cfg) {
  Bundle bundle(cfg);
  if (kind == "translation-bound") return scan_translation(cfg, bundle);
  if (kind == "continuity") return scan_continuity(cfg, bundle);
  if (kind == "monotonicity") return scan_monotonicity(cfg, bundle);
  if (kind == "ito") return scan_ito(cfg, bundle);
  throw std::invalid_argument("unknown scan kind '" + kind + "'");
}

namespace {

// || phi_t - phi - int_0^t (1/2) Lap phi_s ds ||_{p-1} on a uniform grid,
// cumulative trapezoid in time; returns the per-time residual norms.
std::vector<double> heat_residual_series(const RunConfig& cfg, const HermiteCoeffs& phi,
                                         const std::string& method, int n_grid) {
  const double T = cfg.t();
  std::vector<double> res(static_cast<std::size_t>(n_grid) + 1, 0.0);
  HermiteCoeffs integral(phi.dim, phi.degree);
  HermiteCoeffs half_lap_prev = cdouble{0.5, 0.0} * apply_laplacian(phi);
  const double h = T / n_grid;
  for (int i = 1; i <= n_grid; ++i) {
    const double s = T * static_cast<double>(i) / n_grid;
    const HermiteCoeffs phi_s = solve_one(cfg, method, phi, s, nullptr);
    HermiteCoeffs half_lap = cdouble{0.5, 0.0} * apply_laplacian(phi_s);
    integral += cdouble{0.5 * h, 0.0} * (half_lap_prev + half_lap);
    half_lap_prev = std::move(half_lap);
    res[static_cast<std::size_t>(i)] = sobolev_norm(phi_s - phi - integral, cfg.p() - 1.0);
  }
  return res;
}

}  // namespace

CommandResult cmd_residual_heat(const RunConfig& cfg) {
  Bundle bundle(cfg);
  const HermiteCoeffs phi = cfg.build_input();
  const int n = std::max(64, cfg.steps());

  bundle.timings.start("residual");
  const auto coarse = heat_residual_series(cfg, phi, "spectral", n);
  const auto fine = heat_residual_series(cfg, phi, "spectral", 2 * n);
  bundle.timings.stop();

  const double rc = coarse.back();
  const double rf = fine.back();
  const double order = (rc > 0.0 && rf > 0.0) ? std::log2(rc / rf) : 0.0;
  const double gate = cfg.threshold("residual_heat_order_min");
  if (!(order >= gate))
    bundle.fail("time-quadrature residual order under grid doubling",
                {{"order", order}, {"gate", gate}});

  json report{{"kind", "residual-heat"},
              {"t", cfg.t()},
              {"grid_points", n},
              {"terminal_residual_coarse", rc},
              {"terminal_residual_fine", rf},
              {"order", order}};

  if (cfg.compare()) {
    bundle.timings.start("residual:conv-reference");
    const auto conv = heat_residual_series(cfg, phi, "conv-reference", n);
    bundle.timings.stop();
    double max_diff = 0.0;
    for (std::size_t i = 0; i < conv.size(); ++i)
      max_diff = std::max(max_diff, std::abs(conv[i] - coarse[i]));
    report["conv_reference_terminal_residual"] = conv.back();
    report["residual_max_diff"] = max_diff;
    const double gate2 = cfg.threshold("cross_method_distance");
    if (max_diff > 10.0 * gate2)
      bundle.fail("conv-reference residual agrees with spectral",
                  {{"max_diff", max_diff}, {"gate", 10.0 * gate2}});
  }

  std::vector<double> times(coarse.size());
  for (std::size_t i = 0; i < times.size(); ++i)
    times[i] = cfg.t() * static_cast<double>(i) / n;
  write_csv(bundle.dir / "residual_heat.csv", {"t", "residual"}, {times, coarse});

  report["config"] = echo_of(cfg);
  CommandResult res;
  res.exit_code = bundle.finish(report);
  res.report = std::move(report);
  return res;
}

json info_json() {
  json j{{"name", "hheat"},
         {"version", kVersion},
         {"max_quad_nodes", kMaxQuadNodes},
         {"envelope_rule", "|x| <= 0.5*sqrt(2N)"},
         {"projection_rule", "Q = 2N + 16"}};
#ifdef _OPENMP
  j["openmp"] = true;
  j["max_threads"] = omp_get_max_threads();
#else
  j["openmp"] = false;
#endif
  return j;
}

}  // namespace hheat::cli
