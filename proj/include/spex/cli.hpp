#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spex::cli {

/// Runs one subcommand. `args` excludes the program name. Returns 0 on
/// success, 2 on invalid parameters or unreadable input, 1 on internal failure.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace spex::cli
