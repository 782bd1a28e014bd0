#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace minemb {

// Runs the command line (arguments without the program name) and returns the
// process exit code: 0 = all checks passed, 1 = at least one ledger record
// failed, 2 = usage or domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace minemb
