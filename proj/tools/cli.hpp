#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specvar::cli {

/// Exit codes: 0 success, 1 usage or input error, 2 a checked bound was violated.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kViolation = 2;

/// Runs the tool on args (without the program name). Machine-readable output
/// goes to out, diagnostics and summaries to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specvar::cli
