#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace genfrac::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kValidation = 2;
inline constexpr int kNumerical = 3;
inline constexpr int kVerifyFailed = 4;

/// Runs the command line (without the program name) against the given streams.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses `lo:hi:n` (geometric when lo > 0, else linear) or a single real.
std::vector<double> parse_points(const std::string& text);

/// Shortest round-trip decimal; integral values keep a trailing ".0".
std::string format_real(double v);

}  // namespace genfrac::cli
