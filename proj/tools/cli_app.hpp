#pragma once

#include <iosfwd>
#include <vector>

namespace qcontig::cli {

/// Runs the CLI with the given arguments (argv[0] excluded), writing the
/// report stream to `out` and diagnostics to `err`. Returns the process
/// exit code: 0 all pass, 1 any fail/error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcontig::cli
