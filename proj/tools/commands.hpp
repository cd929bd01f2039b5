#ifndef ORDCONE_TOOLS_COMMANDS_HPP
#define ORDCONE_TOOLS_COMMANDS_HPP

#include <ostream>
#include <string>
#include <vector>

namespace ordcone::cli {

enum ExitCode { kOk = 0, kInputError = 1, kNegative = 2 };

/// Runs the command line (without the program name) and returns the exit
/// code: 0 on success, 2 when the computed verdict is negative or
/// infeasible, 1 when the input could not be processed.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordcone::cli

#endif  // ORDCONE_TOOLS_COMMANDS_HPP
