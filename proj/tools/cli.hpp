#ifndef BCOLAB_TOOLS_CLI_HPP
#define BCOLAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace bcolab {

/// Full command-line surface, runnable in-process. `args` excludes the
/// program name. Returns the process exit code: 0 pass/solved,
/// 1 verified-false/none, 2 parse, 3 precondition, 4 internal invariant.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bcolab

#endif
