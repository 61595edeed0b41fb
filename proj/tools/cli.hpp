#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace depolar::cli {

// Runs the command line given by args (without the program name), writing
// reports to out and diagnostics to err.  Returns the process exit code:
// 0 on success, 1 on domain errors, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace depolar::cli
