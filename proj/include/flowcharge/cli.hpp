#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowcharge::cli {

// Exit codes for solve-like commands.
inline constexpr int kExitOptimal = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitLimitFeasible = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitLimitNoSolution = 4;
inline constexpr int kExitUsage = 64;

/// Runs the command line `args` (program name first) and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a file's bytes.
std::string sha256_file(const std::string& path);

}  // namespace flowcharge::cli
