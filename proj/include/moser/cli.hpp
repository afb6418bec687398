#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace moser::cli {

/// Runs one command-line invocation. `args` excludes the program name.
/// Returns 0 on success, 1 on usage/domain/range errors, 2 on fixture or
/// b-file mismatches.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace moser::cli
