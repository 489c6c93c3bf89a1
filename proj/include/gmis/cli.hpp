#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gmis {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitVerification = 2 };

/// Runs the command line `args` (without the program name). Data and the
/// human summary go to `out`, diagnostics and usage errors to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gmis
