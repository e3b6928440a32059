#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ttk::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInvalidParams = 2;
inline constexpr int kExitIo = 3;

/// Runs the `ttk` command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ttk::cli
