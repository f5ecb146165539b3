#include "semigraphoid/axioms.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sg {

axiom_equation canonical_axiom(int x, int y, int z, int w) {
    if (x > y) std::swap(x, y);
    if (z > w) std::swap(z, w);
    if (std::pair(x, y) > std::pair(z, w)) {
        std::swap(x, z);
        std::swap(y, w);
    }
    return axiom_equation{x, y, z, w};
}

static std::vector<axiom_equation> build_axioms(int n) {
    const statement_table& tab = table_for(n);
    std::set<axiom_equation> out;
    // one 3-face per (free triple T, K disjoint); three axioms per face (apex choice)
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                subset tmask = mask_of({a, b, c});
                for (subset K = 0; K < (1u << n); ++K) {
                    if (K & tmask) continue;
                    std::array<int, 3> T{a, b, c};
                    for (int apex = 0; apex < 3; ++apex) {
                        int i = T[apex], j = T[(apex + 1) % 3], l = T[(apex + 2) % 3];
                        int x = tab.ordinal(make_statement(i, j, K | (1u << (l - 1))));
                        int y = tab.ordinal(make_statement(i, l, K));
                        int z = tab.ordinal(make_statement(i, j, K));
                        int w = tab.ordinal(make_statement(i, l, K | (1u << (j - 1))));
                        out.insert(canonical_axiom(x, y, z, w));
                    }
                }
            }
    return {out.begin(), out.end()};
}

const std::vector<axiom_equation>& generate_axioms(int n) {
    if (n < 2 || n > max_ground_set) throw std::out_of_range("ground-set size out of range");
    static std::array<std::vector<axiom_equation>, max_ground_set + 1> cache;
    static std::array<bool, max_ground_set + 1> built{};
    static std::mutex mu;
    std::lock_guard lock(mu);
    if (!built[n]) {
        cache[n] = build_axioms(n);
        built[n] = true;
    }
    return cache[n];
}

std::string axiom_text(const axiom_equation& e, const statement_table& tab) {
    return statement_text(tab.at(e.x)) + " + " + statement_text(tab.at(e.y)) + " = " +
           statement_text(tab.at(e.z)) + " + " + statement_text(tab.at(e.w));
}

axiom_equation parse_axiom(const std::string& text, const statement_table& tab) {
    std::istringstream in(text);
    std::string sa, plus1, sb, eq, sc, plus2, sd;
    if (!(in >> sa >> plus1 >> sb >> eq >> sc >> plus2 >> sd) || plus1 != "+" || eq != "=" || plus2 != "+")
        throw std::invalid_argument("bad axiom syntax: '" + text + "'");
    return canonical_axiom(tab.ordinal(parse_statement(sa)), tab.ordinal(parse_statement(sb)),
                           tab.ordinal(parse_statement(sc)), tab.ordinal(parse_statement(sd)));
}

}  // namespace sg
