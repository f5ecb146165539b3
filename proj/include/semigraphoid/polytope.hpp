#pragma once

#include <array>
#include <string>
#include <vector>

#include "semigraphoid/rational.hpp"

namespace sg {

// rows c.x <= c0, considered modulo the lineality span
struct h_polytope {
    int dim = 0;
    std::vector<std::pair<rat, rat_vec>> rows;  // (c0, c)
    std::vector<rat_vec> lineality;
};

enum class polytope_status { ok, empty, unbounded };

struct vertex_enumeration {
    polytope_status status = polytope_status::ok;
    std::vector<rat_vec> vertices;  // representatives orthogonal to the lineality
};

// brute force over d-subsets of facet rows solved together with
// orthogonality to the lineality generators
vertex_enumeration vertices_from_facets(const h_polytope& h);

struct face_lattice {
    std::vector<std::vector<int>> facet_vertices;       // per facet row
    std::vector<std::vector<std::vector<int>>> faces;   // by dimension 0..d-1
    std::vector<int> f_vector;
    // per facet: (vertex count, edge count, 2-face count)
    std::vector<std::array<int, 3>> facet_stats;
};

face_lattice build_face_lattice(const h_polytope& h, const std::vector<rat_vec>& vertices);

// the paper-style POINTS block: optional header line, rows of 1+dim rationals
std::string polytope_text(const h_polytope& h);
h_polytope parse_polytope(const std::string& text);

}  // namespace sg
