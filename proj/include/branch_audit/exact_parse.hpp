#pragma once

#include <string_view>
#include <vector>

#include "branch_audit/cyclotomic.hpp"
#include "branch_audit/polyalg.hpp"

namespace branch_audit {

// Exact literals for the poly and evaluate subcommands. Atoms are integers
// and decimals, i, zeta(m,k), cis(p/q) = e^{i pi p/q}, and z (polynomials
// only); + - * / ^ with juxtaposition as multiplication, so "z^2-2z+2" and
// "1/2 + 3/4 i" both parse. Division only by nonzero constants.
Poly parse_poly(std::string_view src);
CycNum parse_exact_scalar(std::string_view src);
/// "[a, b, c]" or "a, b, c".
std::vector<CycNum> parse_scalar_list(std::string_view src);

}  // namespace branch_audit
