#pragma once

// Command-line entry point, callable in-process.
//
// Exit status: 0 when every check passes, 1 when a check fails (the failing
// names go to err), 2 on a usage error or invalid parameters.

#include <iosfwd>
#include <string>
#include <vector>

namespace qonkit {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qonkit
