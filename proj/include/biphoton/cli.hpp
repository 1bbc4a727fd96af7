#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace biphoton::cli {

/// Parse and execute one command line (without the program name). Data goes
/// to `out`, diagnostics to `err`. Returns 0 on success, 2 on usage or
/// configuration errors, 3 on data-validation failures.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace biphoton::cli
