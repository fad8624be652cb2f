#pragma once

#include <iosfwd>
#include <string>

#include "casimir/types.hpp"

namespace casimir::cli {

enum class Command { Compute, Scan, Validate, Limits };
enum class OutputFormat { Json, Csv };

// Inclusive linear grid with count points.
struct AxisRange {
  double start = 0.0;
  double stop = 0.0;
  int count = 0;  // 0 = not requested
  bool active() const { return count > 0; }
};

// A fully resolved request: command-line flags, config file and environment
// have already been merged (flags > config > environment > defaults).
struct RunRequest {
  Command command = Command::Compute;
  BoundaryPair bc = BoundaryPair::DD;
  int n_dim = 3;
  double separation = 1.0;
  double temperature = 0.0;  // 0 selects the zero-temperature branch
  AxisRange separation_range;
  AxisRange temperature_range;
  SeriesControl ctrl;
  OutputFormat output_format = OutputFormat::Json;
  std::string output_path;  // empty = stdout
  bool inject_sign_fault = false;  // debug: flips one sign in the validate suite
};

// "start:stop:count" with count >= 2 and start < stop.
AxisRange parse_range(const std::string& text);

// Executes a resolved request. Reports go to `out` (or req.output_path when
// set), progress and failure notes to `diag`. Returns the process exit code:
// 0 ok, 1 failed validate check, 3 convergence budget (scan/validate handle
// their per-point failures internally). Throws ValidationError /
// ConvergenceError for request-level problems.
int run(const RunRequest& req, std::ostream& out, std::ostream& diag);

// Parses argv, merges configuration layers, runs, maps exceptions to exit
// codes (2 validation, 3 convergence).
int main_entry(int argc, const char* const* argv);

}  // namespace casimir::cli
