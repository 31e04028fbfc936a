#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vsz::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitDegenerate = 1,
    kExitInputError = 2,
    kExitCapExceeded = 3,
};

/// Runs the `vsz` command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vsz::cli
