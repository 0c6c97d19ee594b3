#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace propp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitNotP = 2;
inline constexpr int kExitCounterexample = 3;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitGuard = 65;

// args excludes the program name. Data goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace propp::cli
