#pragma once

#include <string>
#include <vector>

#include "semigraphoid/statement_set.hpp"

namespace sg {

// permutations of [n] as words sigma(1)..sigma(n); the region convention is
// sigma <-> { x : x_{sigma(1)} <= ... <= x_{sigma(n)} }
const std::vector<permutation>& symmetric_group(int n);

// statement of the wall crossed by swapping positions k, k+1 (1-based k):
// [sigma(k) : sigma(k+1) | {sigma(1..k-1)}]
ci_statement edge_statement(const permutation& sigma, int k);

struct rank_partition {
    int n = 0;
    std::vector<std::vector<permutation>> classes;  // canonical order, members sorted
};

// connected components of S_n under swaps whose statements lie in the set
rank_partition rank_test(const statement_set& s);  // throws if not a semigraphoid

// union of edge statements over within-class adjacent pairs
statement_set statements_of_partition(const rank_partition& p);

struct class_poset {
    int n = 0;
    std::vector<std::pair<int, int>> relations;  // a < b pairs, transitively closed
    std::vector<std::pair<int, int>> covers;
    bool preconvex = false;  // linear extensions of the poset == the class
};

class_poset poset_of_class(int n, const std::vector<permutation>& cls);

// primary criterion: every class poset has a connected Hasse diagram with
// exactly n-1 covers (its order cone is simplicial with 1-dim lineality)
bool is_simplicial(const statement_set& s);  // throws if a class is not pre-convex

// oracle: extreme rays of {x : x_a <= x_b for covers} modulo the all-ones
// line; simplicial iff lineality is one-dimensional and there are n-1 rays
bool simplicial_oracle(const class_poset& p);
int order_cone_extreme_rays(const class_poset& p);
int order_cone_lineality_dim(const class_poset& p);

// partition files: one class per line, permutations as digit words
std::string partition_text(const rank_partition& p);
rank_partition parse_partition(const std::string& text, int n);

}  // namespace sg
