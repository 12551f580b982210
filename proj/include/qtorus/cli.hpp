#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtorus {

inline constexpr const char* kToolVersion = "1.0.0";

/// Exit codes: 0 success, 1 property or certification failure, 2 input
/// error, 3 budget exceeded.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2, kExitBudget = 3 };

/// args excludes the program name. Reports are deterministic for identical
/// arguments; no timing data is emitted.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtorus
