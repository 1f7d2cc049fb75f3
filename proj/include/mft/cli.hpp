#pragma once

#include <iosfwd>

namespace mft::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kValidationError = 2;
inline constexpr int kSingular = 3;
inline constexpr int kGuardExceeded = 4;
inline constexpr int kVerifyFailed = 5;

/// Runs the command line `argv[0] <subcommand> FILE [options]`, writing the
/// result to `out` and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mft::cli
