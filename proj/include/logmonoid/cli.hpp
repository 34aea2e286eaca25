#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logmonoid::cli {

enum ExitCode : int { kOk = 0, kInvalidInput = 1, kViolated = 2 };

/// Runs the command line in-process. args excludes the program name.
/// The result envelope goes to out (or to the -o file), diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logmonoid::cli
