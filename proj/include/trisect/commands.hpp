#pragma once

#include <ostream>

namespace trisect {

/// Parses the command line and runs one subcommand. Returns the process exit
/// code: 0 no failures, 1 some check failed, 2 input error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace trisect
