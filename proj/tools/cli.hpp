#pragma once

#include <ostream>

namespace kregular::cli {

// Exit codes
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitResource = 3;
inline constexpr int kExitInternal = 4;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kregular::cli
