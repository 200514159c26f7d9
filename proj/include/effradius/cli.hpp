#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace effradius::cli {

// Runs one CLI invocation (args excludes the program name). Reports go to
// `out` unless --out redirects them to a file; diagnostics go to `err`.
// Returns the process exit code: 0 success, 1 usage/parse error, 2
// numeric/domain failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace effradius::cli
