#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace richwords::cli {

/// Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage error.
enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace richwords::cli
