#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace simdepth {

enum ExitCode : int { kExitOk = 0, kExitInputError = 1, kExitNonConvergence = 2 };

/// Parses argv (without the program name) and dispatches to a subcommand.
/// Results go to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace simdepth
