#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpr {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitMismatch = 3;
inline constexpr int kExitCapExceeded = 4;

// Runs one CLI invocation (args exclude the program name) and returns the
// exit code. Results go to `out`, diagnostics and traces to `err`.
//
// Subcommands: solve, reliability, mps, verify. See the README or --help.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace qpr
