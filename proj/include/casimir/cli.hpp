#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace casimir {

/// Runs the command-line front end on argv (argv[0] is the program name).
/// Returns 0 on success, 1 on a verification mismatch, 2 on invalid input.
int run_cli(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace casimir
