#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace flowshop::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitIo = 3;
inline constexpr int kExitGuard = 4;

/// Runs one `flowshop` invocation. `args` excludes the program name.
/// Ground-truth output goes to `out`, diagnostics and human summaries to
/// `err`. Returns the process exit code.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace flowshop::cli
