#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace normgcd::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitDomainError = 2;
inline constexpr int kExitUsage = 64;

/// Runs one command line (without the program name) and returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace normgcd::cli
