#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qc {

/// Runs one tool invocation. Exit codes: 0 pass/true, 1 false or mismatch,
/// 2 usage or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qc
