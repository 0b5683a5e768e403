#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hheat/coeffs.hpp"
#include "hheat/heat.hpp"
#include "hheat/ito.hpp"
#include "hheat/monotonicity.hpp"
#include "hheat/monte_carlo.hpp"
#include "hheat/sobolev.hpp"
#include "hheat/translation.hpp"

namespace hheat {

using json = nlohmann::json;

/// Wire format: {"d": ..., "N": ..., "ordering": "graded-lex",
///               "coeffs": [[re, im], ...]} in enumerate_indices order.
json coeffs_to_json(const HermiteCoeffs& phi);

/// Rejects missing fields, unknown ordering, and length mismatches.
HermiteCoeffs coeffs_from_json(const json& j);

void save_coeffs(const HermiteCoeffs& phi, const std::filesystem::path& file);
HermiteCoeffs load_coeffs(const std::filesystem::path& file);

/// Report payloads; `echo` carries the run configuration (d, N, Q, seed, ...)
/// verbatim so every report can reproduce itself.
json report_to_json(const TranslationReport& rep, const json& echo);
json report_to_json(const ContinuityReport& rep, const json& echo);
json report_to_json(const MCEstimate& est, const json& echo);
json report_to_json(const ItoResidualReport& rep, const json& echo);
json report_to_json(const ItoConvergenceReport& rep, const json& echo);
json report_to_json(const MartingaleReport& rep, const json& echo);
json report_to_json(const SdeSolutionReport& rep, const json& echo);
json report_to_json(const MonotonicityReport& rep, const json& echo);
json report_to_json(const NormEquivalenceReport& rep, const json& echo);

void write_json_file(const json& j, const std::filesystem::path& file);
json read_json_file(const std::filesystem::path& file);

/// Two-column (or wider) CSV with a header row.
void write_csv(const std::filesystem::path& file, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

}  // namespace hheat
