#include "hheat/io.hpp"

#include <fstream>
#include <stdexcept>

#include "hheat/multi_index.hpp"

namespace hheat {

json coeffs_to_json(const HermiteCoeffs& phi) {
  json coeffs = json::array();
  for (const auto& z : phi.c) coeffs.push_back({z.real(), z.imag()});
  return json{{"d", phi.dim}, {"N", phi.degree}, {"ordering", "graded-lex"},
              {"coeffs", std::move(coeffs)}};
}

HermiteCoeffs coeffs_from_json(const json& j) {
  for (const char* field : {"d", "N", "ordering", "coeffs"})
    if (!j.contains(field))
      throw std::runtime_error(std::string("coefficient file: missing field '") + field + "'");
  if (j.at("ordering").get<std::string>() != "graded-lex")
    throw std::runtime_error("coefficient file: unknown ordering '" +
                             j.at("ordering").get<std::string>() + "'");
  const int d = j.at("d").get<int>();
  const int N = j.at("N").get<int>();
  const auto& arr = j.at("coeffs");
  const auto expected = static_cast<std::size_t>(index_count(d, N));
  if (!arr.is_array() || arr.size() != expected)
    throw std::runtime_error("coefficient file: length does not match C(N+d, d)");
  HermiteCoeffs phi(d, N);
  for (std::size_t i = 0; i < expected; ++i) {
    const auto& pair = arr.at(i);
    if (!pair.is_array() || pair.size() != 2)
      throw std::runtime_error("coefficient file: entries must be [re, im] pairs");
    phi.c[i] = cdouble{pair.at(0).get<double>(), pair.at(1).get<double>()};
    if (!std::isfinite(phi.c[i].real()) || !std::isfinite(phi.c[i].imag()))
      throw std::runtime_error("coefficient file: non-finite entry");
  }
  return phi;
}

void write_json_file(const json& j, const std::filesystem::path& file) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
  out << j.dump(2) << '\n';
}

json read_json_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open for reading: " + file.string());
  return json::parse(in);
}

void save_coeffs(const HermiteCoeffs& phi, const std::filesystem::path& file) {
  write_json_file(coeffs_to_json(phi), file);
}

HermiteCoeffs load_coeffs(const std::filesystem::path& file) {
  return coeffs_from_json(read_json_file(file));
}

json report_to_json(const TranslationReport& rep, const json& echo) {
  return json{{"kind", "translation-bound"},
              {"p", rep.p},
              {"d", rep.d},
              {"N", rep.N},
              {"degree_bound", rep.degree_bound},
              {"radii", rep.radii},
              {"ratios", rep.ratios},
              {"slope", rep.slope},
              {"config", echo}};
}

json report_to_json(const ContinuityReport& rep, const json& echo) {
  return json{{"kind", "continuity"},
              {"p", rep.p},
              {"d", rep.d},
              {"N", rep.N},
              {"t_grid", rep.t_grid},
              {"deviations", rep.deviations},
              {"slope", rep.slope},
              {"config", echo}};
}

json report_to_json(const MCEstimate& est, const json& echo) {
  return json{{"kind", "mc-expectation"},
              {"t", est.t},
              {"samples", est.samples},
              {"seed", est.seed},
              {"mean", coeffs_to_json(est.mean)},
              {"std_error", est.std_error},
              {"aggregate_se", est.aggregate_se()},
              {"outside_envelope", est.outside_envelope},
              {"config", echo}};
}

json report_to_json(const ItoResidualReport& rep, const json& echo) {
  return json{{"kind", "ito-residual"},
              {"p", rep.p},
              {"h", rep.h},
              {"realized_covariation", rep.used_realized_covariation},
              {"times", rep.times},
              {"residual_norms", rep.residual_norms},
              {"terminal_residual", rep.terminal_residual},
              {"config", echo}};
}

json report_to_json(const ItoConvergenceReport& rep, const json& echo) {
  return json{{"kind", "ito-convergence"},
              {"p", rep.p},
              {"T", rep.T},
              {"paths", rep.paths},
              {"seed", rep.seed},
              {"step_sizes", rep.step_sizes},
              {"mean_terminal_residual", rep.mean_terminal},
              {"order", rep.order},
              {"config", echo}};
}

json report_to_json(const MartingaleReport& rep, const json& echo) {
  return json{{"kind", "martingale"},
              {"p", rep.p},
              {"t", rep.t},
              {"samples", rep.samples},
              {"steps", rep.steps},
              {"seed", rep.seed},
              {"mean_norm", rep.mean_norm},
              {"aggregate_se", rep.aggregate_se},
              {"isometry_mc", rep.isometry_mc},
              {"isometry_predicted", rep.isometry_predicted},
              {"config", echo}};
}

json report_to_json(const SdeSolutionReport& rep, const json& echo) {
  return json{{"kind", "sde-solution"},
              {"p", rep.p},
              {"T", rep.T},
              {"samples", rep.samples},
              {"steps", rep.steps},
              {"seed", rep.seed},
              {"energy_full", rep.energy_full},
              {"energy_quarter", rep.energy_quarter},
              {"rel_change", rep.rel_change},
              {"residual_checked", rep.residual_checked},
              {"residual_step_sizes", rep.residual_step_sizes},
              {"residual_terminal", rep.residual_terminal},
              {"residual_order", rep.residual_order},
              {"config", echo}};
}

json report_to_json(const MonotonicityReport& rep, const json& echo) {
  return json{{"kind", "monotonicity"},
              {"p", rep.p},
              {"d", rep.d},
              {"N", rep.N},
              {"ensemble", rep.ensemble},
              {"seed", rep.seed},
              {"ratios", rep.ratios},
              {"max_ratio", rep.max_ratio},
              {"config", echo}};
}

json report_to_json(const NormEquivalenceReport& rep, const json& echo) {
  return json{{"kind", "norm-equivalence"},
              {"m", rep.m},
              {"norm_m", rep.norm_m},
              {"operator_sum", rep.operator_sum},
              {"ratio_sum_over_norm", rep.ratio_sum_over_norm},
              {"ratio_norm_over_sum", rep.ratio_norm_over_sum},
              {"config", echo}};
}

void write_csv(const std::filesystem::path& file, const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
  if (columns.size() != header.size())
    throw std::invalid_argument("write_csv: header/column count mismatch");
  std::size_t rows = 0;
  for (const auto& col : columns) rows = std::max(rows, col.size());
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot open for writing: " + file.string());
  for (std::size_t i = 0; i < header.size(); ++i)
    out << header[i] << (i + 1 < header.size() ? "," : "\n");
  out.precision(17);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (r < columns[c].size()) out << columns[c][r];
      out << (c + 1 < columns.size() ? "," : "\n");
    }
  }
}

}  // namespace hheat
