#pragma once

// Command-line front end. run() never touches the process streams and
// returns the exit status, so tests can drive it directly.

#include <iosfwd>
#include <string>
#include <vector>

namespace tca::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitOracleFailure = 1;
inline constexpr int kExitBadFlags = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitNotFound = 4;

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tca::cli
