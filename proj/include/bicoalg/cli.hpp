#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bicoalg::cli {

/// Exit codes of run().
enum Exit : int { Pass = 0, Fail = 1, Schema = 2, Structural = 3 };

/// Runs the command line `args` (without the program name). Reports and
/// documents go to `out` unless -o is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bicoalg::cli
