#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace quiverinv::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kPrecondition = 3,
    kBudget = 4,
    kInternal = 5,
};

/// Runs one command. `args` excludes the program name. A single JSON
/// document goes to `out`; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Names of all commands, in help order.
const std::vector<std::string> &command_names();

} // namespace quiverinv::cli
