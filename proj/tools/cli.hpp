#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sacolor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIo = 2;

/// Entry point for the `generate`, `solve` and `sweep` subcommands.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "1,2.5,5:20:5" into {1, 2.5, 5, 10, 15, 20}. Ranges are start:stop:step, inclusive.
std::vector<double> parse_real_list(const std::string& text);

}  // namespace sacolor::cli
