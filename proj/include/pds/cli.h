#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pds::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kInfeasible = 2, kLimit = 3 };

// Runs one subcommand: solve, check, bound, gen, emit, import, bench.
// args excludes the program name. Machine-readable output goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pds::cli
