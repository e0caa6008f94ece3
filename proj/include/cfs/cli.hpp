#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cfs {

// Exit codes of the `cfs` tool.
enum ExitCode : int {
    kExitOk = 0,       // ok, provable, all pass
    kExitFailed = 1,   // refuted or a property failed
    kExitUnknown = 2,  // search budget exhausted
    kExitInput = 3,    // bad arguments, parse or IO error
};

// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cfs
