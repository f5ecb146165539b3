#pragma once

#include <cstdint>
#include <functional>

#include "semigraphoid/axioms.hpp"
#include "semigraphoid/statement_set.hpp"

namespace sg {

// both directions of (SG): for every axiom x+y=z+w, {x,y} in S iff {z,w} in S
bool is_semigraphoid(const statement_set& s);

// least fixpoint of the inference; extensive, monotone, idempotent
statement_set closure(const statement_set& s);

// maximal among non-full semigraphoids: every single-statement extension
// closes to the full set
bool is_coarsest(const statement_set& s);  // throws if s is not a semigraphoid

// counts of members with |K| = 0 .. n-2
std::vector<int> type_signature(const statement_set& s);

// Exhaustive enumeration over 2^gamma_n bitmasks, n <= 4; the callback
// receives each semigraphoid as a low-bits mask.  The scan partitions its
// range over `threads` workers and merges results in index order, so the
// sink runs sequentially and the stream is deterministic.  Returns the count.
long enumerate_semigraphoids(int n, int threads,
                             const std::function<void(std::uint32_t)>& sink);

// worker cap from SEMIGRAPHOID_THREADS, else hardware concurrency
int default_thread_count();

}  // namespace sg
