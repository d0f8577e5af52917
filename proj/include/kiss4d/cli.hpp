#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kiss4d {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;  // e.g. configuration is not kissing
inline constexpr int kExitUsage = 2;   // bad arguments or unreadable input

/// Runs one command line (without the program name). Data goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace kiss4d
