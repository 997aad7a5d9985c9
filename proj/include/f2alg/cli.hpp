// Command-line front end. run() is the whole dispatcher so tests can drive
// it in-process; the binary in tools/ is a thin wrapper.
#ifndef F2ALG_CLI_HPP
#define F2ALG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace f2alg::cli {

// Exit status: 0 on success / all-pass, 1 on check failure, 2 on usage or
// parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace f2alg::cli

#endif
