#pragma once

#include <optional>
#include <vector>

#include "semigraphoid/imset.hpp"
#include "semigraphoid/verify.hpp"

namespace sg {

// lattice point in the cone spanned by the elementary imsets?
// (exact LP feasibility of {A x = b, x >= 0})
bool is_structural(const imset& b);

// nonnegative-integer witness with A x = b, or nullopt; graded DFS choosing
// statements level by level, conditioning sets forced by the residual
std::optional<std::vector<long long>> is_combinatorial(const imset& b);

constexpr int default_degree_cap = 12;

// the complete fiber {x in N^gamma : A x = b}; throws when the forced total
// degree exceeds the cap
std::vector<std::vector<long long>> enumerate_fiber(const imset& b, int degree_cap = default_degree_cap);

// Non-normality bundle on the embedded n=5 fixtures: b is structural but not
// combinatorial, 2b is combinatorial, and the homogenized cone
// {(z,u) >= 0 : A z = b u} is the single ray through (alpha+beta, 2).
verification_report verify_nonnormality();

}  // namespace sg
