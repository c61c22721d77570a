#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace irdom::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_input_error = 2;

/// Runs one command; `args` excludes the program name.
auto run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err) -> int;

} // namespace irdom::cli
