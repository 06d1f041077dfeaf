#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qvh/constants.hpp"

namespace qvh::cli {

enum class OutputFormat { Json, Csv, Table };

OutputFormat parse_format(const std::string& tag);

/// Parsed invocation. Physical inputs are expressed in `units`.
struct RunConfig {
  std::string command;
  UnitSystem units = UnitSystem::SI;
  double alpha = 1.0;
  double rel_tol = 1e-12;
  OutputFormat format = OutputFormat::Table;

  std::optional<double> mass;
  std::optional<double> field;
  std::optional<double> acceleration;
  std::optional<double> omega;
  std::optional<double> probe_mass;
  std::optional<double> r;
  std::string metric;  // empty: chosen from the curve
  std::string curve = "static";
  double s = 0.0;
  double s_min = 0.0;
  double s_max = 0.0;
  int samples = 11;
  std::optional<std::array<double, 3>> momentum;
  std::optional<std::array<double, 3>> velocity;
  bool sweep = false;
  double normalization = 1.0;
};

struct Output {
  std::string name;
  double value = 0.0;
  std::string unit;
  std::string dimension;
  std::string source;  // relation the value comes from, e.g. "hawking-exact"
};

/// Tabular payload (worldline samples, sweeps, matrices). Empty cells mean
/// "infinite" (curvature radius of a geodesic).
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::string> units;
  std::vector<std::vector<std::optional<double>>> rows;
};

struct ResultEnvelope {
  std::string command;
  nlohmann::json inputs = nlohmann::json::object();  // name -> {value, unit}
  std::vector<Output> outputs;
  std::vector<Table> tables;
  std::vector<std::string> notes;
};

/// Routes the configuration to the owning module. Throws qvh::Error on
/// invalid physics input or an unknown command.
ResultEnvelope dispatch(const RunConfig& config);

nlohmann::json to_json(const ResultEnvelope& env);

/// Rebuilds the configuration echoed in a JSON envelope.
RunConfig config_from_envelope(const nlohmann::json& envelope);

std::string render(const ResultEnvelope& env, OutputFormat format);

/// Scientific notation with the given number of significant digits.
std::string format_number(double value, int significant);

/// Rounds to `significant` digits, the precision JSON and CSV carry.
double round_significant(double value, int significant);

}  // namespace qvh::cli
