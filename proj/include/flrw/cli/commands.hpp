#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "flrw/cli/config.hpp"

namespace flrw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitConfigError = 2;
inline constexpr int kReportSchemaVersion = 1;

struct Command {
  std::string name;
  std::string help;
  std::vector<KeySpec> keys;
  /// Writes the command's table or report to `out`, diagnostics to `err`;
  /// returns the exit code.
  std::function<int(const RunConfig&, std::ostream& out, std::ostream& err)> run;
};

/// kernel, epd, dirac, propagator, verify.
const std::vector<Command>& commands();

/// Expands suite names and aliases (kernels, algebra, epd, dirac,
/// propagator, all) from a comma-separated list, in canonical order.
std::vector<std::string> select_suites(const std::string& selection);

/// printf("%.17g").
std::string format_number(double x);

}  // namespace flrw::cli
