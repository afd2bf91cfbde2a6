#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace specht {

// Runs the command-line tool; writes results to `out`, failure reports to
// `err`.  Returns the process exit code (0 iff all requested checks pass).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specht
