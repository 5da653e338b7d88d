#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace retailfail {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;
inline constexpr int kExitUsage = 2;

// Runs one CLI invocation. args[0] is the program name. Report output goes
// to `out` (or to --out), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace retailfail
