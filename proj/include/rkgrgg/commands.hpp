#pragma once

// Run configuration (one JSON document) and the subcommand implementations
// shared by the C API and the command-line tool.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rkgrgg/bounds.hpp"
#include "rkgrgg/graph.hpp"
#include "rkgrgg/harness.hpp"

namespace rkgrgg {

enum class Command { generate, analyze, sweep, bounds, check_constants, selftest };
enum class OutputFormat { text, csv, json, edges };

std::string_view to_string(Command c) noexcept;
std::optional<Command> parse_command(std::string_view s) noexcept;
std::string_view to_string(OutputFormat f) noexcept;

struct AnalyzeConfig {
  std::string input;
  bool cells = false;
  double delta = 0.5;
  double theta = 0.5;
};

struct SweepConfig {
  std::vector<RegimeSpec> points;
  std::uint64_t trials = 100;
  bool cells = true;
  std::optional<double> epsilon;
};

struct BoundsConfig {
  std::string eval;
  // Parameter name -> values, in the evaluator's declared order.
  std::vector<std::pair<std::string, std::vector<double>>> params;
};

struct ConstantsConfig {
  SufficiencyConstants consts;
  KeyPoolParams pool{65536, 64};
  std::optional<std::uint64_t> cell_nodes;
};

struct SelftestConfig {
  std::uint64_t instances = 200;
  std::uint64_t draws = 2000;
};

struct RunConfig {
  Command command = Command::selftest;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  OutputFormat format = OutputFormat::text;
  std::string output;
  ModelParams generate;
  AnalyzeConfig analyze;
  SweepConfig sweep;
  BoundsConfig bounds;
  ConstantsConfig check_constants;
  SelftestConfig selftest;
};

/// Parses and validates a whole document. Unknown fields and out-of-range
/// values raise ValidationError naming the field.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig parse_config_text(std::string_view text);

/// Canonical form with defaults filled in; the --dry-run echo.
nlohmann::json to_json(const RunConfig& config);

/// Names of the bounds evaluators, and the parameters each one takes.
std::vector<std::string> bound_evaluators();
std::vector<std::string> bound_parameters(std::string_view eval);

struct CommandResult {
  std::string text;
  bool selftest_failed = false;
};

/// Executes the configured subcommand and renders its output in the
/// configured format. Throws ValidationError, DomainError or
/// std::runtime_error (I/O).
CommandResult run_command(const RunConfig& config);

}  // namespace rkgrgg
