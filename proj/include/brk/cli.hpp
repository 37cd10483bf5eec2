#ifndef BRK_CLI_HPP
#define BRK_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace brkit {

// Runs the command-line tool on the given arguments (program name excluded),
// writing reports to out and diagnostics to err.  Returns 0 when the
// requested check holds, 1 when it is falsified, 2 on usage or input errors.
int brk_main(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace brkit

#endif
