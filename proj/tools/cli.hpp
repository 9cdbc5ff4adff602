#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twoside {

// Runs the command line (without the program name). Reports go to `out` or the
// --output file, diagnostics to `err`. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twoside
