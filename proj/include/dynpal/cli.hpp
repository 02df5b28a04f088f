#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dynpal::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitUsage = 64;
inline constexpr int kExitRange = 65;
inline constexpr int kExitIo = 66;

// args excludes the program name, e.g. {"apply", "--input", "t.txt", ...}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dynpal::cli
