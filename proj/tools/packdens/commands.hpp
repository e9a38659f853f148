#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace packdens::cli {

/// Runs the packdens command line (args excludes the program name).
/// Returns the process exit code: 0 success, 1 runtime error, 2 usage error,
/// 3 when `verify` completes with a FAIL verdict.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace packdens::cli
