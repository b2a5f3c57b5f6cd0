#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coopshare::cli {

/// Entry point behind the coopshare binary; split out so the test suite can
/// drive commands in-process. Returns the process exit code:
///   0  expected outcome (run/trajectory printed, check passed, matrix as
///      published, search found a witness)
///   1  unexpected verdict (check failed, matrix mismatch, search exhausted)
///   2  invalid input or usage
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace coopshare::cli
