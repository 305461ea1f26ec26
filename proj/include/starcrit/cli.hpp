#ifndef STARCRIT_CLI_HPP
#define STARCRIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace starcrit::cli {

// Exit codes: 0 success, 1 computation-level failure, 2 usage error.
// `args` excludes the program name. Data goes to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream &out, std::ostream &err);

}  // namespace starcrit::cli

#endif
