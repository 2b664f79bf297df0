#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lucaszeta::cli {

// Runs one CLI invocation. Reports go to `out`, machine-readable
// diagnostics to `err`. Exit codes: 0 success, 1 evaluation/usage error,
// 2 identity-suite failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace lucaszeta::cli
