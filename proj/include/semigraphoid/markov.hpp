#pragma once

#include <set>
#include <string>
#include <vector>

#include "semigraphoid/fiber.hpp"
#include "semigraphoid/statement_set.hpp"

namespace sg {

// integer vector over statement ordinals; represents x^{g+} - x^{g-}
struct markov_move {
    int n = 0;
    std::vector<long long> v;

    std::vector<long long> plus() const;
    std::vector<long long> minus() const;
    long long degree_plus() const;
    bool zero() const;
};

bool in_kernel(const markov_move& m);

// fiber of A.g+ equals exactly {g+, g-}
bool is_indispensable(const markov_move& m, int degree_cap = default_degree_cap);

// {sigma.m, -sigma.m : sigma in S_n}, canonical sign, deduplicated
std::set<std::vector<long long>> orbit(const markov_move& m);
std::vector<long long> canonical_sign(std::vector<long long> v);

struct fiber_connectivity {
    imset target;
    size_t fiber_size = 0;
    int components = 0;
};

struct connectivity_report {
    bool all_connected = true;
    std::vector<fiber_connectivity> fibers;
};

connectivity_report connectivity_check(const std::vector<markov_move>& basis,
                                       const std::vector<imset>& targets,
                                       int degree_cap = default_degree_cap);

// the ideal generated by a set of statement variables
struct monomial_prime {
    int n = 0;
    statement_set vars;
};

// every axiom binomial x y - z w has both monomials meeting the prime
bool prime_contains_axioms(const monomial_prime& p);

// (#semigraphoids, #submodular semigraphoids) via the {0,1}-variety bijection
std::pair<long, long> count_01_points(int n, int threads);

// {0,1}-vector of a statement set (1 on members) annihilates every axiom binomial
bool zero_one_point_annihilates(const statement_set& s);

// move files: a '+' line and a '-' line of i.j|K tokens with optional ^mult
std::string move_text(const markov_move& m);
markov_move parse_move(const std::string& text, int n);
int infer_move_ground_set(const std::string& text);

}  // namespace sg
