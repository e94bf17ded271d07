#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mzv::cli {

/// Exit codes: all checks passed, a mathematical check failed, usage error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs the command line front end. argv[0] is the program name. Never
/// throws; every failure is mapped to an exit code with a message on `err`.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace mzv::cli
