#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace threept::cli {

/// Exit codes: 0 success, 1 stage-1 failures, 2 usage or parse error,
/// 3 step budget exceeded.
int run(int argc, char** argv);

/// Same as run(argc, argv) with explicit streams; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace threept::cli
