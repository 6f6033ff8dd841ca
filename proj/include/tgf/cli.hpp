// Command-line entry point, callable in-process for testing.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tgf {

// Runs the CLI on the given arguments (program name excluded). Exit code
// 0: success / all checked properties hold; 1: a verified property was
// violated (counterexample printed); 2: usage or parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace tgf
