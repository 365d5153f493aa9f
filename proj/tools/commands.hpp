#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace arcmetric::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 2;
inline constexpr int kDomain = 3;
inline constexpr int kUnsupported = 4;

/// Runs one command line (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace arcmetric::cli
