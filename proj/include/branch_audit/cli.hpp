#pragma once

#include <ostream>

namespace branch_audit {

/// Entry point of the branch-audit tool. Exit codes: 0 success with a
/// definite verdict everywhere, 2 when some finding or certificate is
/// undecided, 1 on errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace branch_audit
