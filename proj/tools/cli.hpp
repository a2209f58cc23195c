#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dblab::cli {

/// Runs one command. `args` excludes the program name. The JSON document goes
/// to `out`; diagnostics go to `err`. Returns 0 on success, 1 on a
/// computation error (or a failed verify), 2 on a malformed command line or config.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dblab::cli
