#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "hheat/coeffs.hpp"

namespace hheat::cli {

using json = nlohmann::json;

/// One experiment description: a JSON document with documented defaults;
/// command-line flags override individual keys. The merged document is echoed
/// verbatim into every report bundle, so a bundle reproduces itself.
class RunConfig {
 public:
  RunConfig();  // defaults only
  static RunConfig from_file(const std::filesystem::path& file);

  void merge(const json& overrides);

  const json& doc() const { return doc_; }

  int d() const { return doc_.at("d").get<int>(); }
  int N() const { return doc_.at("N").get<int>(); }
  /// Quadrature nodes; 0 means "derive from N by the 2N+16 rule".
  int Q() const;
  double p() const { return doc_.at("p").get<double>(); }
  double t() const { return doc_.at("t").get<double>(); }
  std::uint64_t samples() const { return doc_.at("M").get<std::uint64_t>(); }
  std::uint64_t seed() const { return doc_.at("seed").get<std::uint64_t>(); }
  std::string input() const { return doc_.at("input").get<std::string>(); }
  std::string method() const { return doc_.at("method").get<std::string>(); }
  std::vector<std::string> methods() const;
  std::filesystem::path out_dir() const { return doc_.at("out").get<std::string>(); }
  bool compare() const { return doc_.at("compare").get<bool>(); }
  int steps() const { return doc_.at("steps").get<int>(); }
  int directions() const { return doc_.at("directions").get<int>(); }
  int ensemble() const { return doc_.at("ensemble").get<int>(); }
  int paths() const { return doc_.at("paths").get<int>(); }
  int level_min() const { return doc_.at("level_min").get<int>(); }
  int level_max() const { return doc_.at("level_max").get<int>(); }
  std::vector<int> N_list() const;
  std::vector<double> t_grid() const;   // empty when unset
  std::vector<double> radii() const;    // empty when unset
  double threshold(const std::string& name) const;

  /// The built-in input specs: "delta@x", "hermite@k", "gaussian@(mean,var)",
  /// or a coefficient-file path. Throws on unknown or malformed specs.
  HermiteCoeffs build_input() const;

 private:
  json doc_;
};

/// Parses "name@args" payloads like "(0.5,1)" or "3" into a number list.
std::vector<double> parse_number_list(const std::string& payload);

}  // namespace hheat::cli
