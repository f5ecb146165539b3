#pragma once

#include <optional>

#include "semigraphoid/rational.hpp"

namespace sg {

// rank over the rationals (in-place elimination on a copy)
int rank(const rat_mat& m);

// basis of the right null space; m * v = 0 for each, count = cols - rank
std::vector<rat_vec> kernel_basis(const rat_mat& m);

// unique solution of a square system, or nullopt when singular
std::optional<rat_vec> solve_square(const rat_mat& m, const rat_vec& rhs);

}  // namespace sg
