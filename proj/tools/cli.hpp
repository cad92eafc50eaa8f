#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace univoque::cli {

// Runs one command line (args excludes the program name). Writes results to
// `out` and diagnostics to `err`. Returns 0, 1 on domain or usage errors,
// 2 when a decision ran out of budget.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace univoque::cli
