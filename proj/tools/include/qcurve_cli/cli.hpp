#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qcurve::cli {

/// Exit codes of the command-line tool.
enum ExitCode { kOk = 0, kCheckFailed = 1, kConfigError = 2 };

/// Runs the tool on argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcurve::cli
