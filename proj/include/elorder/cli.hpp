#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace elorder {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;

/// Runs one CLI invocation; `args` excludes the program name.
/// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elorder
