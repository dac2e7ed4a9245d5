#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ordisc::cli {

/// Exit codes: 0 success, 2 bad input, 3 a checked identity failed.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitConsistency = 3;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordisc::cli
