#ifndef DIRAC_CLI_HPP
#define DIRAC_CLI_HPP

#include <iostream>
#include <string>
#include <vector>

namespace dirac::cli {

// Runs one CLI invocation. Exit codes: 0 ok, 2 input error, 3 mathematical
// identity violation.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, char** argv);

}  // namespace dirac::cli

#endif
