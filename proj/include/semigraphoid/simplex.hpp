#pragma once

#include <optional>

#include "semigraphoid/rational.hpp"

namespace sg {

// Feasibility of { x : E x = f, x_j >= lower_j (or free) }.
struct feasibility_problem {
    rat_mat E;
    rat_vec f;
    std::vector<std::optional<rat>> lower;  // nullopt = free variable
};

enum class lp_status { feasible, infeasible };

// witness satisfies every constraint exactly; certificate y proves emptiness:
// y.E_j <= 0 for bounded j, y.E_j = 0 for free j, and y.(f - E.lower) > 0.
// Both are re-verified by exact arithmetic before the solver returns.
struct feasibility_result {
    lp_status status = lp_status::infeasible;
    rat_vec witness;
    rat_vec certificate;
    bool feasible() const { return status == lp_status::feasible; }
};

// Exact phase-one simplex with Bland's rule.
feasibility_result solve_feasibility(const feasibility_problem& p);

// Incremental construction with slack variables for inequality rows.
// Base variables come first; slacks are appended in row order.
class lp_builder {
public:
    explicit lp_builder(int nvars);

    void set_lower(int var, rat lb);
    void set_free(int var);

    using row = std::vector<std::pair<int, rat>>;  // sparse coefficients on base vars
    void add_eq(const row& coeffs, rat rhs);
    void add_ge(const row& coeffs, rat rhs);
    void add_le(const row& coeffs, rat rhs);

    int base_vars() const { return nvars_; }
    int rows() const { return static_cast<int>(rel_.size()); }
    feasibility_problem build() const;

private:
    int nvars_;
    std::vector<std::optional<rat>> lower_;
    std::vector<row> rows_;
    std::vector<int> rel_;  // -1 le, 0 eq, +1 ge
    rat_vec rhs_;
};

}  // namespace sg
