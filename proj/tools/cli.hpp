#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cicy::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitComputation = 3;

/// Runs one command line (args excludes the program name). Output goes to
/// out, single-line diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cicy::cli
