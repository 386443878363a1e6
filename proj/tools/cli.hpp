#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kgraph::cli {

/// Exit codes: 0 all checks pass, 1 a mathematical check failed (the
/// report carries a certificate), 2 usage or format error.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// args excludes the program name. Reports go to `out` as JSON, logs and
/// errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kgraph::cli
