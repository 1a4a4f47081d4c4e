#ifndef FRFTLAB_CLI_HPP
#define FRFTLAB_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace frftlab {

// Exit codes: 0 ok, 2 usage, 3 numeric precondition, 4 I/O.
// Every failure prints exactly one line starting "error: " on err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frftlab

#endif
