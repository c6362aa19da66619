#pragma once

#include <iosfwd>

namespace planar::cli {

// Exit codes: 0 ok, 1 check or suite failure, 2 invalid parameters, 3 oracle disagreement.
inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_oracle = 3;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace planar::cli
