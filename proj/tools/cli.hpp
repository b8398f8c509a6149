#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prejj::cli {

/// Exit codes: 0 pass, 1 checked and failed, 2 usage, IO or parse error.
enum ExitCode : int { pass = 0, failed = 1, usage = 2 };

/// Runs the prejj command line. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace prejj::cli
