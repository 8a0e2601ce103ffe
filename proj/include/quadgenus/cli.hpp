#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quadgenus::cli {

enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_invalid_input = 2 };

/*
 * Runs one command line (without the program name). Output goes to `out`,
 * diagnostics and timing to `err`. Returns the process exit code.
 */
int run(std::vector<std::string> const & args, std::ostream & out, std::ostream & err);

} // namespace quadgenus::cli
