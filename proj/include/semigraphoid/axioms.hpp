#pragma once

#include <string>
#include <vector>

#include "semigraphoid/statements.hpp"

namespace sg {

// x + y = z + w over statement ordinals, encoding
// [i:j|K+l] + [i:l|K] = [i:j|K] + [i:l|K+j].
// Canonical form: x < y, z < w, (x,y) <= (z,w), so the list is duplicate-free.
struct axiom_equation {
    int x = 0, y = 0, z = 0, w = 0;
    bool operator==(const axiom_equation&) const = default;
    auto operator<=>(const axiom_equation&) const = default;
};

axiom_equation canonical_axiom(int x, int y, int z, int w);

// All 3 * C(n,3) * 2^(n-3) canonical equations, sorted.
const std::vector<axiom_equation>& generate_axioms(int n);

std::string axiom_text(const axiom_equation& e, const statement_table& tab);  // "a + b = c + d"
axiom_equation parse_axiom(const std::string& text, const statement_table& tab);

// membership pattern of an equation against a set of statement ordinals
enum class axiom_class {
    all_inside,     // all four statements in the set
    all_outside,    // none in the set
    one_inside,     // exactly one in the set
    opposite_pair,  // one per side: reduces to a difference of the outside pair
    other,          // any remaining pattern (impossible against a semigraphoid)
};

template <typename MemberFn>
axiom_class classify_axiom(const axiom_equation& e, MemberFn in) {
    int l = int(in(e.x)) + int(in(e.y));
    int r = int(in(e.z)) + int(in(e.w));
    int t = l + r;
    if (t == 4) return axiom_class::all_inside;
    if (t == 0) return axiom_class::all_outside;
    if (t == 1) return axiom_class::one_inside;
    if (l == 1 && r == 1) return axiom_class::opposite_pair;
    return axiom_class::other;
}

}  // namespace sg
