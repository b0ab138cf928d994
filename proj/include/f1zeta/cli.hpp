#pragma once

// Batch front end: configuration parsing, check execution and reports.

#include <optional>
#include <string>
#include <vector>

#include "f1zeta/det.hpp"
#include "f1zeta/error.hpp"
#include "f1zeta/serialize.hpp"

namespace f1zeta::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_invalid_config = 2;
inline constexpr int exit_resource = 3;

// A configuration error naming the offending field.
class ConfigError : public InvalidInput {
 public:
  ConfigError(const std::string& field, const std::string& message)
      : InvalidInput(field + ": " + message), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

inline const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{"comparison", "geodesic_oracle", "ihara",           "invariants",
                                              "lfunction",  "positive_zeta",   "selberg_rational", "selberg_series"};
  return names;
}

struct Limits {
  Int max_vertices = 4096;
  Int max_box_points = 50'000'000;
  bool acknowledge_override = false;
};

struct Perturbation {
  int type = 1;
  std::size_t row = 0;
  std::size_t col = 0;
  std::int32_t delta = 1;
};

struct RunConfig {
  int n = 0;
  std::string kind;  // "translation" or "affine"
  TranslationSubgroup translation;
  AffineSubgroup affine;
  int max_degree = 12;
  LengthScale scale = LengthScale::geodesic;
  double tolerance = 1e-9;
  std::vector<std::string> checks;  // sorted, unique
  Limits limits;
  DetEngine engine = DetEngine::multimodular;
  std::optional<Perturbation> perturbation;
  std::string label;
};

RunConfig parse_config(const Json& j);
RunConfig load_config(const std::string& path);
Json config_to_json(const RunConfig& c);

struct RunOutcome {
  int exit_code = exit_ok;
  Json report;
};

RunOutcome run(const RunConfig& config);
// Human-readable summary of a report.
std::string summarize(const Json& report);

// The built-in panel. With perturb, the first group gets a unit change
// in one adjacency entry.
std::vector<RunConfig> demo_panel(bool perturb);
RunOutcome demo_suite(bool perturb);

// Removes every "timing_ms" field, recursively.
Json strip_timings(Json report);

}  // namespace f1zeta::cli
