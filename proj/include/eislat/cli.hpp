#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eislat {

// Runs one CLI invocation. Exit code 0: success / all checks pass;
// 1: a verification check failed; 2: invalid input.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eislat
