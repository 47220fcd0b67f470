#pragma once

#include <ostream>

namespace schurext::cli {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2, exit_unsupported = 3, exit_guard = 4 };

// Runs the command line `argv[1..argc)`; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace schurext::cli
