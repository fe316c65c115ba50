#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace mtree::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFailure = 1;  // I/O, parse, or usage error
inline constexpr int kVerdictNo = 2;  // not a tree metric, relation violated

/// Runs one command. `args` excludes the program name. Reports go to `out`
/// only once complete; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace mtree::cli
