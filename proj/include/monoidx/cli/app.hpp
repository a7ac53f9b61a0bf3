#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace monoidx::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitError = 2;

// Runs the command line (args[0] is the program name). Exit codes: 0 success
// or "yes", 1 ordering answered "no", 2 input or domain error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace monoidx::cli
