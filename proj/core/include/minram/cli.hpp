#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace minram::cli {

// Runs one subcommand. args excludes the program name, e.g.
// {"schinzel", "--n", "2", "--a", "1,-1"}. The JSON result document goes to
// out; diagnostics go to err. Returns the process exit code: 0 success,
// 1 bad input, 2 nothing found within the search bounds, 3 a verification
// failure or internal error.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace minram::cli
