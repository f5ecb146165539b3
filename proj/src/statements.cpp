#include "semigraphoid/statements.hpp"

#include <bit>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace sg {

int popcount(subset s) { return std::popcount(s); }

subset mask_of(std::initializer_list<int> elems) {
    subset m = 0;
    for (int e : elems) m |= 1u << (e - 1);
    return m;
}

std::string subset_text(subset s) {
    std::string out;
    for (int e = 1; e <= max_ground_set; ++e)
        if (s >> (e - 1) & 1u) out += static_cast<char>('0' + e);
    return out;
}

subset parse_subset(const std::string& s) {
    if (s == "0") return 0;
    subset m = 0;
    for (char c : s) {
        if (c < '1' || c > '8') throw std::invalid_argument("bad subset element: " + s);
        m |= 1u << (c - '1');
    }
    return m;
}

int gamma(int n) {
    if (n < 2 || n > max_ground_set) throw std::out_of_range("ground-set size out of range");
    return n * (n - 1) / 2 * (1 << (n - 2));
}

ci_statement make_statement(int a, int b, subset K) {
    if (a == b) throw std::invalid_argument("statement pair must be two elements");
    ci_statement s;
    s.i = std::min(a, b);
    s.j = std::max(a, b);
    s.K = K;
    return s;
}

bool valid_statement(const ci_statement& s, int n) {
    if (s.i < 1 || s.j <= s.i || s.j > n) return false;
    if (s.K >> n) return false;
    return (s.K & s.pair_mask()) == 0;
}

bool statement_less(const ci_statement& a, const ci_statement& b) {
    int ka = popcount(a.K), kb = popcount(b.K);
    if (ka != kb) return ka < kb;
    if (a.K != b.K) return a.K < b.K;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
}

std::string statement_text(const ci_statement& s) {
    std::string out;
    out += static_cast<char>('0' + s.i);
    out += '.';
    out += static_cast<char>('0' + s.j);
    out += '|';
    out += subset_text(s.K);
    return out;
}

ci_statement parse_statement(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("bad statement syntax: '" + text + "'"); };
    if (text.size() < 4 || text[1] != '.') throw bad();
    char ci = text[0], cj = text[2];
    if (ci < '1' || ci > '8' || cj < '1' || cj > '8' || text[3] != '|') throw bad();
    subset K = 0;
    for (size_t p = 4; p < text.size(); ++p) {
        if (text[p] < '1' || text[p] > '8') throw bad();
        K |= 1u << (text[p] - '1');
    }
    auto s = make_statement(ci - '0', cj - '0', K);
    if ((K & s.pair_mask()) != 0) throw bad();
    return s;
}

ci_statement apply_permutation(const permutation& sigma, const ci_statement& s) {
    subset K2 = 0;
    for (int e = 1; e <= static_cast<int>(sigma.size()); ++e)
        if (s.K >> (e - 1) & 1u) K2 |= 1u << (sigma[e - 1] - 1);
    return make_statement(sigma[s.i - 1], sigma[s.j - 1], K2);
}

statement_table::statement_table(int n) : n_(n) {
    int g = gamma(n);
    statements_.reserve(g);
    lookup_.assign((1u << n) * 9 * 9, -1);
    for (int k = 0; k <= n - 2; ++k)
        for (subset K = 0; K < (1u << n); ++K) {
            if (popcount(K) != k) continue;
            for (int i = 1; i <= n; ++i) {
                if (K >> (i - 1) & 1u) continue;
                for (int j = i + 1; j <= n; ++j) {
                    if (K >> (j - 1) & 1u) continue;
                    lookup_[(K * 9 + i) * 9 + j] = static_cast<int>(statements_.size());
                    statements_.push_back(ci_statement{i, j, K});
                    levels_.push_back(k);
                }
            }
        }
}

int statement_table::ordinal(const ci_statement& s) const {
    if (!valid_statement(s, n_)) throw std::invalid_argument("statement not valid over this ground set: " + statement_text(s));
    return lookup_[(s.K * 9 + s.i) * 9 + s.j];
}

const statement_table& table_for(int n) {
    if (n < 2 || n > max_ground_set) throw std::out_of_range("ground-set size out of range");
    static std::array<std::unique_ptr<statement_table>, max_ground_set + 1> tables;
    static std::mutex mu;
    std::lock_guard lock(mu);
    if (!tables[n]) tables[n] = std::make_unique<statement_table>(n);
    return *tables[n];
}

}  // namespace sg
