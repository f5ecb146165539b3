#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sg {

// Ground set is [n] = {1,..,n}, 2 <= n <= 8. Subsets are bitmasks with
// element e on bit e-1.
using subset = unsigned;

constexpr int max_ground_set = 8;

int popcount(subset s);
subset mask_of(std::initializer_list<int> elems);
std::string subset_text(subset s);           // sorted digits, "" for the empty set
subset parse_subset(const std::string& s);   // inverse; "0" also accepted as empty

// gamma_n = C(n,2) * 2^(n-2), the number of CI statements on [n]
int gamma(int n);

// A CI statement [i:j|K]: unordered pair {i,j} disjoint from the
// conditioning set K. Canonical orientation i < j.
struct ci_statement {
    int i = 0;
    int j = 0;
    subset K = 0;

    bool operator==(const ci_statement&) const = default;
    subset pair_mask() const { return (1u << (i - 1)) | (1u << (j - 1)); }
};

ci_statement make_statement(int a, int b, subset K);
bool valid_statement(const ci_statement& s, int n);

// canonical order: by |K|, then K as an integer, then (i,j) lexicographically
bool statement_less(const ci_statement& a, const ci_statement& b);

std::string statement_text(const ci_statement& s);        // "i.j|K", e.g. "2.3|14", "1.2|"
ci_statement parse_statement(const std::string& text);    // throws std::invalid_argument

// Permutations of [n] stored as words: word[k] = image of position k+1 when
// used as a ranking, or sigma(k+1) when used as a relabeling map.
using permutation = std::vector<int>;

ci_statement apply_permutation(const permutation& sigma, const ci_statement& s);

// Per-n enumeration table: canonical statement order and ordinal lookup.
class statement_table {
public:
    explicit statement_table(int n);

    int n() const { return n_; }
    int size() const { return static_cast<int>(statements_.size()); }
    const std::vector<ci_statement>& statements() const { return statements_; }
    const ci_statement& at(int ordinal) const { return statements_[ordinal]; }
    int ordinal(const ci_statement& s) const;

    // ordinal-level shortcuts used by hot loops
    int level(int ordinal) const { return levels_[ordinal]; }

private:
    int n_;
    std::vector<ci_statement> statements_;
    std::vector<int> levels_;
    std::vector<int> lookup_;  // indexed by (K * 9 + i) * 9 + j
};

// shared immutable tables, one per ground-set size
const statement_table& table_for(int n);

}  // namespace sg
