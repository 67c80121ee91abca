#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace zca::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kInputError = 2, kNumericFailure = 3 };

/// Runs one command line (without the program name). Human-readable
/// summaries go to `out`, diagnostics and usage to `err`; reports and CSV
/// profiles are written to the --out directory.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zca::cli
