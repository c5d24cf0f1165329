#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rltl::cli {

/// Exit codes: 0 query holds / command succeeded, 2 query fails (or
/// Player 1 wins), 1 error.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kNegative = 2;

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rltl::cli
