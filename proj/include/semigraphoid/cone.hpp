#pragma once

#include <optional>

#include "semigraphoid/rational.hpp"

namespace sg {

// All functions concern the cone { x >= 0 : E x = 0 }.

// coordinates that are strictly positive somewhere in the cone
std::vector<int> positive_support(const rat_mat& E);

// dimension of the linear span of the cone
int cone_dimension(const rat_mat& E);

// When the cone is a single ray, its minimal integer lattice generator;
// otherwise nullopt.
std::optional<rat_vec> single_ray_generator(const rat_mat& E);

}  // namespace sg
