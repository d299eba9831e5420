#ifndef STIRCONV_CLI_HPP
#define STIRCONV_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace stirconv {

/// Runs the command line given everything after the program name.
/// Exit codes: 0 computed/verified, 1 verification failure or
/// non-convergence, 2 usage or precondition error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace stirconv

#endif
