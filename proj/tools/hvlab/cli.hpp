#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hvlab::cli {

// Process exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;   // some check failed, witness printed
inline constexpr int kExitUsage = 2;  // bad arguments or unreadable input
inline constexpr int kExitSkip = 3;   // nothing failed, nothing passed: preconditions unmet

// Runs one hvlab invocation; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hvlab::cli
