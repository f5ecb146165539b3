#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semigraphoid/statements.hpp"

namespace sg {

// A subset of the gamma_n CI statements, as a bitset over ordinals.
struct statement_set {
    int n = 0;
    std::vector<std::uint64_t> bits;

    statement_set() = default;
    explicit statement_set(int n_) : n(n_), bits((gamma(n_) + 63) / 64, 0) {}

    bool test(int ordinal) const { return bits[ordinal >> 6] >> (ordinal & 63) & 1u; }
    void set(int ordinal) { bits[ordinal >> 6] |= std::uint64_t{1} << (ordinal & 63); }
    void reset(int ordinal) { bits[ordinal >> 6] &= ~(std::uint64_t{1} << (ordinal & 63)); }

    int count() const;
    bool operator==(const statement_set&) const = default;
    bool subset_of(const statement_set& o) const;

    statement_set operator&(const statement_set& o) const;
    statement_set operator|(const statement_set& o) const;

    std::vector<int> members() const;
};

statement_set full_set(int n);
statement_set set_of(int n, const std::vector<ci_statement>& stmts);

// one statement per line; '#' comments; blank lines ignored
std::string statement_set_text(const statement_set& s);
statement_set parse_statement_set(const std::string& text, int n);
// smallest ground set the listed statements fit in (at least 2)
int infer_ground_set(const std::string& text);

// n=4 fast path: the low gamma_4 = 24 bits as one word
std::uint32_t mask32(const statement_set& s);
statement_set from_mask32(int n, std::uint32_t m);

}  // namespace sg
