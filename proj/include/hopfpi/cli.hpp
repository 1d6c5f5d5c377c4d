#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hopfpi {

// Runs one command (args exclude the program name), writing the report to
// out and error diagnostics to err.  Exit codes are a stable contract:
//   0  every check passed
//   1  a mathematical check failed or a construction hypothesis was unmet
//   2  malformed input, unreadable file, or an exceeded resource bound
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace hopfpi
