#ifndef RIFFLE_TOOLS_COMMANDS_HPP
#define RIFFLE_TOOLS_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace riffle::cli
{

enum ExitCode : int
{
    kOk = 0,
    kVerifyFailed = 1,
    kInvalidArgs = 2,
    kCapacity = 3,
};

/// Run the command line `args` (without the program name). Files go to the
/// directory given by --out, or to `out` when --out is "-", each preceded
/// by a "# <filename>" line. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest decimal string that reads back to the same double.
std::string format_double(double v);

} // namespace riffle::cli

#endif
