#include "semigraphoid/cone.hpp"

#include <stdexcept>

#include "semigraphoid/linalg.hpp"
#include "semigraphoid/simplex.hpp"

namespace sg {

namespace {

// x >= 0, E x = 0, x_c >= 1 feasible?  (homogeneous, so >= 1 models > 0)
bool coordinate_positive(const rat_mat& E, int c) {
    feasibility_problem p;
    p.E = E;
    p.f.assign(E.rows, rat(0));
    p.lower.assign(E.cols, rat(0));
    p.lower[c] = rat(1);
    return solve_feasibility(p).feasible();
}

rat_mat restrict_columns(const rat_mat& E, const std::vector<int>& cols) {
    rat_mat out(E.rows, static_cast<int>(cols.size()));
    for (int r = 0; r < E.rows; ++r)
        for (size_t k = 0; k < cols.size(); ++k) out.at(r, static_cast<int>(k)) = E.at(r, cols[k]);
    return out;
}

}  // namespace

std::vector<int> positive_support(const rat_mat& E) {
    std::vector<int> support;
    for (int c = 0; c < E.cols; ++c)
        if (coordinate_positive(E, c)) support.push_back(c);
    return support;
}

int cone_dimension(const rat_mat& E) {
    std::vector<int> support = positive_support(E);
    if (support.empty()) return 0;
    rat_mat sub = restrict_columns(E, support);
    return static_cast<int>(support.size()) - rank(sub);
}

std::optional<rat_vec> single_ray_generator(const rat_mat& E) {
    std::vector<int> support = positive_support(E);
    if (support.empty()) return std::nullopt;
    rat_mat sub = restrict_columns(E, support);
    auto basis = kernel_basis(sub);
    if (basis.size() != 1) return std::nullopt;
    rat_vec ray(E.cols, rat(0));
    for (size_t k = 0; k < support.size(); ++k) ray[support[k]] = basis[0][k];
    // the span of a one-dimensional cone is the ray's line; orient nonnegatively
    bool has_pos = false, has_neg = false;
    for (const rat& v : ray) {
        if (v > 0) has_pos = true;
        if (v < 0) has_neg = true;
    }
    if (has_pos && has_neg) throw std::logic_error("single_ray_generator: support span is not a ray");
    if (has_neg)
        for (rat& v : ray) v = -v;
    return primitive_integer_vector(ray);
}

}  // namespace sg
