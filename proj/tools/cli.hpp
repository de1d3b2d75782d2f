#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace padyn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

/// Runs the padic-dyn command line. args excludes the program name.
/// Results go to out; diagnostics go to err, except under --format json
/// where errors are written to out as {"error": {...}}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace padyn::cli
