#pragma once

// Batch command-line front end.  `run_cli` takes the arguments after the
// program name and returns the process exit status.

#include <iosfwd>
#include <string>
#include <vector>

namespace cobord {

inline constexpr int kExitOk = 0;
inline constexpr int kExitComputation = 1;
inline constexpr int kExitResidual = 2;
inline constexpr int kExitUsage = 64;

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cobord
