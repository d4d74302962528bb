#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace jetgeo::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line `args` (args[0] is the program name). Normal output goes to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on domain errors (invalid class,
/// divergence where a finite value is required, failed verification) and 2 on usage
/// errors (unknown flag, unreadable file, malformed polynomial).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace jetgeo::cli
