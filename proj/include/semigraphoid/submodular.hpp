#pragma once

#include <optional>
#include <string>

#include "semigraphoid/rational.hpp"
#include "semigraphoid/semigraphoid.hpp"

namespace sg {

// One oriented axiom with a positive integer multiplier; negative multiplier
// means the equation is used right-to-left.
struct certificate_term {
    int axiom_index = 0;  // into generate_axioms(n)
    long long coeff = 0;
};

// Infeasibility certificate for the primal system, canonicalized to the
// minimum-cardinality lexicographically-first support (greedy-pruned when the
// search budget is exceeded), scaled to coprime integers.
struct submodular_certificate {
    int n = 0;
    std::vector<certificate_term> terms;
    // combination restricted to statements outside M, negated: a nonnegative
    // vector over ordinals proving a positive combination must vanish
    std::vector<long long> aggregated;
};

struct submodular_result {
    bool submodular = false;
    // dual witness: w over subsets with <A_c, w> = 0 on M and >= 1 off M
    rat_vec dual_witness;
    // primal witness: x over statements, 0 on M, >= 1 off M, solving the axioms
    rat_vec primal_witness;
    std::optional<submodular_certificate> certificate;  // when not submodular
};

// Decides both LP formulations and checks they agree; throws
// std::invalid_argument when s is not a semigraphoid and std::logic_error if
// the formulations ever disagree.
submodular_result is_submodular(const statement_set& s);

// fast single-formulation deciders (no certificate canonicalization)
bool is_submodular_primal(const statement_set& s);
bool is_submodular_dual(const statement_set& s);

// number of semigraphoids on [n] that are submodular (n <= 4 sweep)
long count_submodular(int n, int threads);

// human-readable rendering of the canonical certificate
std::string certificate_report(const statement_set& s, const submodular_certificate& cert);

}  // namespace sg
