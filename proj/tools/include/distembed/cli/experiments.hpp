#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "distembed/cli/json_io.hpp"

namespace distembed::cli {

using Cell = std::variant<std::monostate, double, std::int64_t, std::string>;
using Record = std::vector<std::pair<std::string, Cell>>;

struct ReportRow {
  Record params;
  Record values;
};

/// One pass/fail predicate over the rows. relation is "<=", ">=", "<", ">" or "==".
struct Check {
  std::string name;
  double value = 0.0;
  std::string relation;
  double threshold = 0.0;
  bool passed = false;
};

struct ExperimentReport {
  std::string name;
  std::vector<ReportRow> rows;
  std::vector<Check> checks;
  Json metadata = Json::object();

  [[nodiscard]] bool passed() const;
  /// Header row (union of parameter and value columns in first-seen order),
  /// then one line per row; doubles with 15 significant digits.
  [[nodiscard]] std::string csv() const;
  [[nodiscard]] Json verdict() const;
};

struct ExperimentOptions {
  std::uint64_t seed = 0;
  /// Overrides the experiment's primary tolerance when set.
  std::optional<double> tolerance;
  /// Experiment-specific parameters; unknown keys are a SchemaError.
  Json params = Json::object();
};

const std::vector<std::string>& experiment_names();

/// Throws SchemaError for unknown names or out-of-range parameters.
ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& options);

/// Formats a double with 15 significant digits in the C locale.
std::string format_number(double v);

}  // namespace distembed::cli
