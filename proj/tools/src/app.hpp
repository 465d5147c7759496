#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace entkit::cli {

// Parses `args` (args[0] is the program name), runs the subcommand and writes
// the report to `out` or to --out. Returns the process exit code: 0 on
// success, 1 when an internal check fails (fuzz), 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace entkit::cli
