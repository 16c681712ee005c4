#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pqdeform::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationError = 1,  ///< malformed flags, invalid parameters, missing inputs
  kCheckFailed = 2,      ///< a verification or positivity check did not pass
};

/// Runs one `pqdeform` invocation. `args` excludes the program name.
/// Reports go to `out` (or to --out FILE), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pqdeform::cli
