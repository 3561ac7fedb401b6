#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyper::cli {

enum ExitCode : int { Ok = 0, Negative = 1, BadInput = 2, OverCap = 3 };

/// Runs one command line (without the program name). JSON goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyper::cli
