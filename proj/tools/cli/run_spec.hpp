#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "steer/optimizer.hpp"
#include "steer/states.hpp"

namespace steer::cli {

enum class Command { Bound, Quantum, Visibility, Optimize, Scan, VerifyPaper };
enum class OutputFormat { Human, Json, Csv };

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kValidationError = 1,
  kComputationError = 2,
  kVerifyFailed = 3,
};

struct RunSpec {
  Command command = Command::Bound;
  Family family = Family::Chained;
  /// 0 means "infer from the direction set".
  int n = 0;
  StateKind state = StateKind::Werner;
  double theta = 0.7853981633974483;
  /// Noise parameter for raw quantum values; thresholds always use V = 1.
  double noise = 1.0;
  /// "preset:NAME", a JSON file path, or inline "x,y,z;x,y,z".
  std::string directions;
  /// Companion set for the other family's scan column (same syntax).
  std::string compare_directions;
  bool polish = false;
  Strategy strategy = Strategy::General;
  OptimizerConfig optimizer;
  OutputFormat format = OutputFormat::Human;
  std::string out_path;
  std::size_t grid_points = 501;
  std::string report_path;
  bool skip_optimizer = false;
};

/// Parses argv into a RunSpec. Returns nullopt after printing help/errors;
/// `exit_code` then holds the code to return.
std::optional<RunSpec> parse_args(int argc, const char* const* argv,
                                  std::ostream& out, std::ostream& err,
                                  int& exit_code);

/// Resolves a direction argument (preset, file or inline list).
DirectionSet resolve_directions(const std::string& source);

/// Executes the spec, writing results to `out` (or spec.out_path) and
/// diagnostics to `err`. Returns an ExitCode.
int run(const RunSpec& spec, std::ostream& out, std::ostream& err);

}  // namespace steer::cli
