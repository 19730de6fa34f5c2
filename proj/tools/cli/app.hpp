#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pnr::cli {

enum ExitCode : int { kSuccess = 0, kComputationFailed = 1, kInvalidArguments = 2 };

/// Runs the command line `args` (args[0] is the program name). Tables go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnr::cli
