#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace scx::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitViolation = 1;
inline constexpr int kExitError = 2;

/// Runs one scx command. `args` excludes the program name. Output is written
/// once, at the end, to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scx::cli
