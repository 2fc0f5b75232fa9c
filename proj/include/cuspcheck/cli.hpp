#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuspcheck::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kReportSchema = "cuspcheck.report/1";

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kInternalError = 2,
  kConditionViolated = 3,
};

/// Runs one subcommand. `args` excludes the program name; "-" as an input
/// path reads from `in`. Exactly one JSON report (or a table with --pretty)
/// goes to `out`; usage errors and messages go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cuspcheck::cli
