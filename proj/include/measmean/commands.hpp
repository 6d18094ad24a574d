#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "measmean/measure.hpp"

namespace measmean {

/// Everything a subcommand needs; filled in by the command-line front end.
struct RunConfig {
  std::string measure;  // catalog name or "built:<mean>"
  std::string mean;     // ordinary mean name for construct
  std::string mu;
  std::string nu;
  std::string set;
  std::vector<double> shifts;
  double window_lo = 0.25;
  double window_hi = 64.0;
  double tol = 1e-13;
  int points = 2048;
  std::string calibration = "density_limit";
  int n_probe = 200;
  int n_random = 1000;
  std::uint64_t seed = 20180410;
  std::vector<std::string> suites;  // empty: all
  int cases = 500;
  std::string format = "csv";  // sweep only: csv or json
};

struct CommandResult {
  std::string output;
  int exit_code = 0;
};

/// A catalog measure, or "built:<mean>" constructed over the config window.
MeasureSpec resolve_measure(const std::string& name, const RunConfig& cfg);

/// Parses "lo,hi" (each a numeric expression). Throws ParseError.
std::pair<double, double> parse_window(const std::string& text);

/// Comma separated numeric expressions. Throws ParseError.
std::vector<double> parse_list(const std::string& text);

CommandResult cmd_mean(const RunConfig& cfg);
CommandResult cmd_construct(const RunConfig& cfg);
/// Exit code 1 unless the certificate is "certified".
CommandResult cmd_compare(const RunConfig& cfg);
CommandResult cmd_sweep(const RunConfig& cfg);
/// Exit code 1 when any suite fails.
CommandResult cmd_verify(const RunConfig& cfg);

}  // namespace measmean
