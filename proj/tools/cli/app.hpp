#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symfuse::cli {

/// Exit codes.
inline constexpr int kAllPass = 0;
inline constexpr int kCheckFailure = 1;
inline constexpr int kUsageError = 2;

/// Runs the command line `args` (without the program name), writing the report
/// to `out` and diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace symfuse::cli
