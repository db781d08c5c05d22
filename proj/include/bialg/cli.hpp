#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bialg {

/// Exit statuses of the command line tool.
enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitParse = 2, kExitCap = 3 };

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bialg
