#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semigraphoid/axioms.hpp"
#include "semigraphoid/imset.hpp"
#include "semigraphoid/markov.hpp"
#include "semigraphoid/polytope.hpp"
#include "semigraphoid/rank_tests.hpp"
#include "semigraphoid/statement_set.hpp"
#include "semigraphoid/sweep.hpp"

namespace sg::fixtures {

// raw embedded reference data (verification goldens)
namespace raw {
extern const char* const axioms5_reference;   // 120 equations, reference order
extern const char* const axioms4_reference;   // 24 equations; '!' marks the four used by the n=4 nonsubmodularity proof
extern const char* const m4_statements;
extern const char* const gamma5_classes;
extern const char* const gamma5_statements;
extern const char* const b5_imset;
extern const char* const alpha5;
extern const char* const beta5;
extern const char* const g5_move;
extern const char* const witness_2b;
extern const char* const polytope10;
extern const char* const table4_reference;
extern const char* const figure1_partition;
extern const char* const cubics4;
extern const char* const quartic4;
extern const char* const prime_codim12;
extern const char* const prime_codim15;
extern const char* const prime_codim16;
}  // namespace raw

std::uint64_t fnv1a(const char* data);
// recompute every embedded checksum; throws on mismatch
void verify_checksums();

// parsed accessors (constructed on demand, cached)
const statement_set& m4();
const std::vector<axiom_equation>& axioms5();              // canonical forms of the reference list
const std::vector<axiom_equation>& axioms4();
const std::vector<int>& marked_axioms4();                  // indices into generate_axioms(4)
const std::vector<axiom_equation>& marked_axioms4_oriented();  // reference orientation, sides not swapped
const rank_partition& gamma5_classes();
const statement_set& gamma5();
const imset& b5();
const std::vector<long long>& alpha5();                    // multiplicity vectors over gamma_5
const std::vector<long long>& beta5();
const markov_move& g5();
const std::vector<long long>& witness_2b();
const h_polytope& polytope10();
const std::vector<classification_row>& table4();
const rank_partition& figure1_partition();
const std::vector<markov_move>& cubics4();
const markov_move& quartic4();
const std::vector<monomial_prime>& primes4();

// write every raw fixture into a directory, one file each
void export_fixtures(const std::string& dir);

}  // namespace sg::fixtures
