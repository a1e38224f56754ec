#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace klrc_cli {

// Runs the command line (without the program name) against the given output
// and error streams.  Returns the process exit code: 0 success, 1 validation
// or usage failure, 2 resource cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace klrc_cli
