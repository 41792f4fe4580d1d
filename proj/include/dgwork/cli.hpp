#ifndef DGWORK_CLI_HPP
#define DGWORK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace dgwork {

/// Exit statuses of the command-line tool.
enum ExitStatus { kComputed = 0, kInputError = 1, kUnstable = 2 };

/// Runs one command line (without the program name).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dgwork

#endif  // DGWORK_CLI_HPP
