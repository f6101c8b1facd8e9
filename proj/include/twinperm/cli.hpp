#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twinperm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitResource = 3;

/// Runs one command line (args excludes the program name). Diagnostics go to `err` only.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace twinperm::cli
