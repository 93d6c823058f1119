#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thermo::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,             ///< success / convertible
  kInputError = 2,     ///< unreadable file, bad rational, unknown name, bad flag
  kNotConvertible = 3,
  kInternalError = 4,  ///< convertibility criteria disagree or a lift fails verification
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thermo::cli
