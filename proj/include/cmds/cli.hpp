#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cmds::cli {

/* Runs one CLI invocation.  args excludes the program name.  Exit codes:
 * 0 property holds / construction succeeded, 1 property fails, 2 usage or
 * input error.  JSON payload goes to `out`, diagnostics to `err`. */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace cmds::cli
