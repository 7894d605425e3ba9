#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubeta::cli {

/// Run the command-line tool on the given arguments (program name
/// excluded). Reports go to out, diagnostics and warnings to err.
/// Exit codes: 0 success, 1 usage error, 2 data error, 3 convergence
/// failure.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cubeta::cli
