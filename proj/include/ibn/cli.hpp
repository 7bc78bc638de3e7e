#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ibn::cli {

/// Runs one command given argv-style arguments (program name excluded).
/// Exit codes: 0 success, 1 parse or usage error, 2 domain error
/// (NotEquivalent, NotFound, overflow, bad files), 3 inconclusive result.
/// IBN_STEP_BOUND in the environment overrides the rewriter step budget.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ibn::cli
