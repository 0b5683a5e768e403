#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "../src/cli/commands.hpp"
#include "../src/cli/run_config.hpp"

namespace {

using hheat::cli::CommandResult;
using hheat::cli::RunConfig;
using json = nlohmann::json;

struct CommonFlags {
  std::string config_path;
  std::string out;
  std::string input;
  std::string method;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool compare = false;
  bool json_out = false;
  int d = 0, N = 0, Q = -1, steps = 0;
  double p = std::numeric_limits<double>::quiet_NaN();
  double t = std::numeric_limits<double>::quiet_NaN();
  std::uint64_t samples = 0;
};

void attach_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--config", f.config_path, "JSON config file; flags override its keys");
  cmd->add_option("--out", f.out, "output directory for the run bundle");
  cmd->add_option("--input", f.input,
                  "input distribution: delta@x | hermite@k | gaussian@(mean,var) | coeff file");
  cmd->add_option("--method", f.method, "spectral | mc | conv-reference");
  cmd->add_option("--seed", f.seed, "master seed (mandatory for stochastic runs)")
      ->each([&f](const std::string&) { f.seed_set = true; });
  cmd->add_option("--d", f.d, "dimension");
  cmd->add_option("--N", f.N, "truncation degree");
  cmd->add_option("--Q", f.Q, "quadrature nodes per axis (0 = auto)");
  cmd->add_option("--p", f.p, "Sobolev order");
  cmd->add_option("--t", f.t, "time horizon");
  cmd->add_option("--M", f.samples, "Monte Carlo sample count");
  cmd->add_option("--steps", f.steps, "time-grid points / path steps");
  cmd->add_flag("--compare", f.compare, "run all configured methods and compare");
  cmd->add_flag("--json", f.json_out, "print the machine-readable report to stdout");
}

RunConfig make_config(const CommonFlags& f) {
  RunConfig cfg;
  if (!f.config_path.empty()) cfg = RunConfig::from_file(f.config_path);
  json over = json::object();
  if (!f.out.empty()) over["out"] = f.out;
  if (!f.input.empty()) over["input"] = f.input;
  if (!f.method.empty()) over["method"] = f.method;
  if (f.seed_set) over["seed"] = f.seed;
  if (f.d > 0) over["d"] = f.d;
  if (f.N > 0) over["N"] = f.N;
  if (f.Q >= 0) over["Q"] = f.Q;
  if (!std::isnan(f.p)) over["p"] = f.p;
  if (!std::isnan(f.t)) over["t"] = f.t;
  if (f.samples > 0) over["M"] = f.samples;
  if (f.steps > 0) over["steps"] = f.steps;
  if (f.compare) over["compare"] = true;
  cfg.merge(over);
  return cfg;
}

int emit(const CommandResult& res, bool json_out) {
  if (json_out) {
    std::cout << res.report.dump(2) << '\n';
  } else {
    const bool pass = res.report.value("pass", false);
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << res.report.value("kind", "run");
    if (res.report.contains("config"))
      std::cout << "  (bundle: " << res.report["config"].value("out", "?") << ")";
    std::cout << '\n';
    for (const auto& f : res.report.value("failures", json::array()))
      std::cout << "  failed: " << f.value("assertion", "?") << '\n';
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"truncated Hermite-spectral heat flow: builders, solvers, scans"};
  app.require_subcommand(1);

  CommonFlags fb, fs, fc, fr;
  std::string scan_kind;

  auto* build = app.add_subcommand("build", "write a coefficient file for an input spec");
  attach_common(build, fb);

  auto* solve = app.add_subcommand("solve", "evolve the input under the heat flow");
  attach_common(solve, fs);

  auto* scan = app.add_subcommand("scan", "property scans with pass/fail verdicts");
  scan->add_option("kind", scan_kind, "translation-bound | continuity | monotonicity | ito")
      ->required();
  attach_common(scan, fc);

  auto* residual = app.add_subcommand("residual-heat", "integrated-equation defect check");
  attach_common(residual, fr);

  bool info_as_json = false;
  auto* info = app.add_subcommand("info", "tool and build information");
  info->add_flag("--json", info_as_json, "JSON output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (build->parsed()) return emit(hheat::cli::cmd_build(make_config(fb)), fb.json_out);
    if (solve->parsed()) return emit(hheat::cli::cmd_solve(make_config(fs)), fs.json_out);
    if (scan->parsed())
      return emit(hheat::cli::cmd_scan(scan_kind, make_config(fc)), fc.json_out);
    if (residual->parsed())
      return emit(hheat::cli::cmd_residual_heat(make_config(fr)), fr.json_out);
    if (info->parsed()) {
      const json j = hheat::cli::info_json();
      if (info_as_json) {
        std::cout << j.dump(2) << '\n';
      } else {
        for (const auto& [k, v] : j.items()) std::cout << k << ": " << v << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
