#pragma once

#include <iosfwd>

namespace movnorm::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitParse = 2;          // bad matrix file or command line
inline constexpr int kExitDimension = 3;
inline constexpr int kExitNotNonexpansive = 4;

/// Entry point of the `movnorm` tool; subcommands curve, horizon, classify,
/// verify and replay. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace movnorm::cli
