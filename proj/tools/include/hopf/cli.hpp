#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopf::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitInputError = 2;

// Runs one hopfkit invocation; `args` excludes the program name. Reports go to
// `out`, diagnostics to `err`. Returns the process exit code: 0 when every
// check passes, 1 on any failure, 2 on usage, input or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf::cli
