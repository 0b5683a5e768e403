#pragma once

#include <string>

#include "run_config.hpp"

namespace hheat::cli {

struct CommandResult {
  int exit_code = 0;  // 0 iff every in-config assertion passed
  json report;        // machine-readable payload incl. a "failures" list
};

/// Writes the input distribution as a coefficient file (out/coefficients/).
CommandResult cmd_build(const RunConfig& cfg);

/// Evolves the input under the heat flow with the configured method(s);
/// with compare=true, cross-method distances gate the exit code.
CommandResult cmd_solve(const RunConfig& cfg);

/// kind: translation-bound | continuity | monotonicity | ito.
CommandResult cmd_scan(const std::string& kind, const RunConfig& cfg);

/// Integrated-equation defect of the spectral solution under time quadrature,
/// with a grid-refinement order estimate.
CommandResult cmd_residual_heat(const RunConfig& cfg);

json info_json();

}  // namespace hheat::cli
