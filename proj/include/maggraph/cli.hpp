#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maggraph::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,    ///< a verified inequality does not hold (harnack, verify)
    kInputError = 2,     ///< usage, parse, validation or precondition problem
    kBudgetExceeded = 3,
};

/// Runs one subcommand. `args` excludes the program name; "-" as the input
/// path reads the graph document from `in`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace maggraph::cli
