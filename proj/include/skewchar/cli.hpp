#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace skewchar {

// Runs the command line `args` (without the program name), writing results
// to `out` and diagnostics to `err`. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace skewchar
