#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace univoque::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kBadInput = 2;
inline constexpr int kUndecided = 3;

// Default working precision in decimal digits when --precision is absent.
inline constexpr const char* kPrecisionEnv = "UNIVOQUE_PRECISION";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace univoque::cli
