#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fourfold::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailed = 1, kUsageError = 2 };

// Runs one invocation of the `fourfold` tool. `args` excludes the program
// name. The catalog is taken from FOURFOLD_CATALOG when that is set.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fourfold::cli
