#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace grid2dom {

// Full command-line front end, in-process so tests can drive it. `args` is
// argv without the program name. Returns the process exit code:
//   0  success
//   1  a --check comparison or oracle-check found a mismatch
//   2  usage error (bad arguments, unknown command, malformed input)
//   3  a configured resource cap was exceeded
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace grid2dom
