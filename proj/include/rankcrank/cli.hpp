#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rankcrank {

inline constexpr int kExitOk = 0;
inline constexpr int kExitClaimFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs the command line `args` (without the program name). Results go to
// out, diagnostics to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rankcrank
