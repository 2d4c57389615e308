#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ffq::cli {

// Exit codes: 0 success, 2 usage error, 3 range overflow (field too small;
// the message names the required k), 4 search budget exhausted.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRangeOverflow = 3;
inline constexpr int kExitBudgetExhausted = 4;

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace ffq::cli
