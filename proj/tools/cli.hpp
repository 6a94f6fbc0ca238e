#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace vwc::cli {

inline constexpr const char* kVersion = "0.1.0";

/// Exit codes.
enum Exit : int { kTrue = 0, kFalse = 1, kInputError = 2, kResourceCap = 3, kInternal = 4 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vwc::cli
