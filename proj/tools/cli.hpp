// cli.hpp — command-line frontend: thresholds, evaluate, expect, simulate, oracle.
#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace secretary::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitSelfCheck = 4;

// args excludes the program name. `tty` picks the default format (csv on a
// terminal, json otherwise).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool tty = false);

int main_entry(int argc, char** argv);

}  // namespace secretary::cli
