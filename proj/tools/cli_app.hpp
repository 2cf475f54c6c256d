#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fatpoints {

// Runs the command line given as argv-style tokens (program name excluded).
// Exit codes: 0 success, 1 usage error, 2 internal invariant violation,
// 3 oracle mismatch. All computation is delegated to the library; this layer
// only parses arguments and renders results.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fatpoints
