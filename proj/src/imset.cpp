#include "semigraphoid/imset.hpp"

#include <sstream>
#include <stdexcept>

namespace sg {

imset& imset::operator+=(const imset& o) {
    for (size_t s = 0; s < c.size(); ++s) c[s] += o.c[s];
    return *this;
}
imset& imset::operator-=(const imset& o) {
    for (size_t s = 0; s < c.size(); ++s) c[s] -= o.c[s];
    return *this;
}
imset& imset::operator*=(long long k) {
    for (auto& v : c) v *= k;
    return *this;
}
bool imset::is_zero() const {
    for (auto v : c)
        if (v != 0) return false;
    return true;
}

imset operator+(imset a, const imset& b) { return a += b; }
imset operator-(imset a, const imset& b) { return a -= b; }
imset operator*(long long k, imset a) { return a *= k; }

imset elementary_imset(const ci_statement& s, int n) {
    if (!valid_statement(s, n)) throw std::invalid_argument("statement not valid over [n]: " + statement_text(s));
    imset b(n);
    subset bi = 1u << (s.i - 1), bj = 1u << (s.j - 1);
    b[s.K | bi] += 1;
    b[s.K | bj] += 1;
    b[s.K] -= 1;
    b[s.K | bi | bj] -= 1;
    return b;
}

void add_elementary(imset& b, const statement_table& tab, int ordinal, long long mult) {
    const ci_statement& s = tab.at(ordinal);
    subset bi = 1u << (s.i - 1), bj = 1u << (s.j - 1);
    b[s.K | bi] += mult;
    b[s.K | bj] += mult;
    b[s.K] -= mult;
    b[s.K | bi | bj] -= mult;
}

imset apply_map(const statement_table& tab, const std::vector<long long>& x) {
    if (static_cast<int>(x.size()) != tab.size()) throw std::invalid_argument("vector length != gamma_n");
    imset b(tab.n());
    for (int c = 0; c < tab.size(); ++c)
        if (x[c] != 0) add_elementary(b, tab, c, x[c]);
    return b;
}

std::vector<long long> level_sums(const imset& b) {
    std::vector<long long> L(b.n + 1, 0);
    for (subset s = 0; s < b.c.size(); ++s) L[popcount(s)] += b.c[s];
    return L;
}

std::optional<std::vector<long long>> level_counts(const imset& b) {
    auto L = level_sums(b);
    std::vector<long long> counts;
    long long prev2 = 0, prev1 = 0;
    for (int t = 0; t <= b.n - 2; ++t) {
        long long nt = 2 * prev1 - prev2 - L[t];
        if (nt < 0) return std::nullopt;
        counts.push_back(nt);
        prev2 = prev1;
        prev1 = nt;
    }
    long long top1 = 2 * prev1 - prev2 - L[b.n - 1];
    long long top2 = 2 * top1 - prev1 - L[b.n];
    if (top1 != 0 || top2 != 0) return std::nullopt;
    return counts;
}

long long degree_functional(const imset& b) {
    long long acc = 0;
    for (subset s = 0; s < b.c.size(); ++s) {
        long long k = popcount(s);
        acc += b.c[s] * k * k;
    }
    if (acc % 2 != 0) throw std::invalid_argument("imset not in the even sublattice hit by the map");
    return -acc / 2;
}

std::string imset_text(const imset& b) {
    std::string out;
    for (subset s = 0; s < b.c.size(); ++s) {
        if (b.c[s] == 0) continue;
        out += std::to_string(b.c[s]);
        out += ' ';
        out += s == 0 ? std::string("0") : subset_text(s);
        out += '\n';
    }
    return out;
}

imset parse_imset(const std::string& text, int n) {
    imset b(n);
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long coeff;
        std::string sub;
        if (!(ls >> coeff)) {
            std::string rest;
            if (ls.clear(), ls >> rest)
                throw std::invalid_argument("imset parse error at line " + std::to_string(lineno));
            continue;  // blank line
        }
        if (!(ls >> sub)) throw std::invalid_argument("imset parse error at line " + std::to_string(lineno) + ": missing subset");
        subset m = parse_subset(sub);
        if (m >> n) throw std::invalid_argument("imset subset outside ground set at line " + std::to_string(lineno));
        b[m] += coeff;
    }
    return b;
}

}  // namespace sg
