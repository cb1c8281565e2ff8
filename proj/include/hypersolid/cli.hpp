#pragma once

#include <ostream>
#include <span>
#include <string>

namespace hypersolid::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // verification or consistency failure
inline constexpr int kExitUsage = 2;

// Runs one command line. args[0] is the program name. Command output goes to
// `out` (or to the --output file), diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace hypersolid::cli
