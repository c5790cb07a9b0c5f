#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xlag::cli {

enum ExitCode { kOk = 0, kCheckFailure = 1, kUsage = 2 };

// args excludes the program name. Files named by --out are written directly.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace xlag::cli
