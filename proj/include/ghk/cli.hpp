#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ghk::cli {

/// Exit statuses of run().
enum ExitCode : int { kOk = 0, kInternalError = 1, kUsageError = 2 };

/// Runs one command line (argv[0] is the program name). Exactly one result
/// object, or one CSV/JSON-lines document, goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace ghk::cli
