#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semigraphoid/statements.hpp"

namespace sg {

// An integer-valued function on the subsets of [n], indexed by subset mask.
struct imset {
    int n = 0;
    std::vector<long long> c;  // size 2^n

    explicit imset(int n_) : n(n_), c(size_t{1} << n_, 0) {}
    imset() = default;

    long long& operator[](subset s) { return c[s]; }
    long long operator[](subset s) const { return c[s]; }
    bool operator==(const imset&) const = default;

    imset& operator+=(const imset& o);
    imset& operator-=(const imset& o);
    imset& operator*=(long long k);
    bool is_zero() const;
};

imset operator+(imset a, const imset& b);
imset operator-(imset a, const imset& b);
imset operator*(long long k, imset a);

// e_{iK} + e_{jK} - e_K - e_{ijK}
imset elementary_imset(const ci_statement& s, int n);

// b += mult * elementary_imset(statement at ordinal)
void add_elementary(imset& b, const statement_table& tab, int ordinal, long long mult);

// image of a multiplicity vector (length gamma_n) under the elementary map
imset apply_map(const statement_table& tab, const std::vector<long long>& x);

// sum of coefficients over subsets of each cardinality, length n+1
std::vector<long long> level_sums(const imset& b);

// Per-level statement counts forced by b: n_t = 2 n_{t-1} - n_{t-2} - L_t,
// n_{-1} = n_{-2} = 0, for t = 0..n-2; the t = n-1, n rows must close at zero.
// Any x in N^gamma with A x = b has exactly n_t statements at conditioning
// level t.  Returns nullopt when the recursion leaves the nonnegative
// integers or the closing rows fail.
std::optional<std::vector<long long>> level_counts(const imset& b);

// -<b, |S|^2>/2; equals the total degree sum(n_t) on the image of the map
long long degree_functional(const imset& b);

// text form: one "<coeff> <subset>" line per nonzero entry, "0" for the empty set
std::string imset_text(const imset& b);
imset parse_imset(const std::string& text, int n);

}  // namespace sg
