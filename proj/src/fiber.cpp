#include "semigraphoid/fiber.hpp"

#include <stdexcept>

#include "semigraphoid/cone.hpp"
#include "semigraphoid/fixtures.hpp"
#include "semigraphoid/simplex.hpp"

namespace sg {

bool is_structural(const imset& b) {
    const statement_table& tab = table_for(b.n);
    feasibility_problem p;
    p.E = rat_mat(1 << b.n, tab.size());
    for (int c = 0; c < tab.size(); ++c) {
        const ci_statement& st = tab.at(c);
        subset bi = 1u << (st.i - 1), bj = 1u << (st.j - 1);
        p.E.at(static_cast<int>(st.K | bi), c) += 1;
        p.E.at(static_cast<int>(st.K | bj), c) += 1;
        p.E.at(static_cast<int>(st.K), c) -= 1;
        p.E.at(static_cast<int>(st.K | bi | bj), c) -= 1;
    }
    p.f.reserve(b.c.size());
    for (long long v : b.c) p.f.emplace_back(static_cast<long>(v));
    p.lower.assign(tab.size(), rat(0));
    return solve_feasibility(p).feasible();
}

namespace {

// Graded depth-first search over preimages.  Levels are processed in
// increasing conditioning-set size; entering level t the residual must vanish
// below size t and be nonpositive at size t, which forces the multiset of
// conditioning sets.  Pair choices within a slot are non-decreasing, so each
// preimage is produced exactly once.
struct fiber_search {
    const statement_table& tab;
    int n;
    std::vector<long long> counts;  // forced per-level counts
    std::vector<long long> x;       // current multiplicities
    std::vector<long long> r;       // residual = b - A(partial)
    std::vector<std::vector<subset>> masks_by_size;
    bool early_exit;
    std::vector<std::vector<long long>> found;

    fiber_search(const imset& b, const std::vector<long long>& lc, bool early)
        : tab(table_for(b.n)),
          n(b.n),
          counts(lc),
          x(tab.size(), 0),
          r(b.c.begin(), b.c.end()),
          masks_by_size(b.n + 1),
          early_exit(early) {
        for (subset s = 0; s < (1u << n); ++s) masks_by_size[popcount(s)].push_back(s);
    }

    void add(const ci_statement& st, long long sign) {
        subset bi = 1u << (st.i - 1), bj = 1u << (st.j - 1);
        r[st.K | bi] -= sign;
        r[st.K | bj] -= sign;
        r[st.K] += sign;
        r[st.K | bi | bj] += sign;
        x[tab.ordinal(st)] += sign;
    }

    bool run_level(int t) {
        if (t > n - 2) {
            for (long long v : r)
                if (v != 0) return false;
            found.push_back(x);
            return early_exit;
        }
        std::vector<std::pair<subset, long long>> slots;
        long long slot_total = 0;
        for (subset m : masks_by_size[t]) {
            if (r[m] > 0) return false;
            if (r[m] < 0) {
                slots.emplace_back(m, -r[m]);
                slot_total += -r[m];
            }
        }
        if (slot_total != counts[t]) return false;
        if (slots.empty()) return run_level(t + 1);
        return run_slot(t, slots, 0, 0, slots[0].second);
    }

    bool run_slot(int t, const std::vector<std::pair<subset, long long>>& slots, size_t si,
                  int start_pair, long long remaining) {
        if (remaining == 0) {
            ++si;
            if (si == slots.size()) return run_level(t + 1);
            return run_slot(t, slots, si, 0, slots[si].second);
        }
        subset K = slots[si].first;
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= n; ++i) {
            if (K >> (i - 1) & 1u) continue;
            for (int j = i + 1; j <= n; ++j) {
                if (K >> (j - 1) & 1u) continue;
                pairs.emplace_back(i, j);
            }
        }
        for (int pi = start_pair; pi < static_cast<int>(pairs.size()); ++pi) {
            ci_statement st{pairs[pi].first, pairs[pi].second, K};
            add(st, +1);
            if (run_slot(t, slots, si, pi, remaining - 1)) return true;
            add(st, -1);
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<long long>> is_combinatorial(const imset& b) {
    auto lc = level_counts(b);
    if (!lc) return std::nullopt;
    fiber_search search(b, *lc, true);
    search.run_level(0);
    if (search.found.empty()) return std::nullopt;
    // soundness: re-multiply the witness
    if (!(apply_map(table_for(b.n), search.found.front()) == b))
        throw std::logic_error("fiber search produced an invalid witness");
    return search.found.front();
}

std::vector<std::vector<long long>> enumerate_fiber(const imset& b, int degree_cap) {
    auto lc = level_counts(b);
    if (!lc) return {};
    long long degree = 0;
    for (long long v : *lc) degree += v;
    if (degree > degree_cap) throw std::invalid_argument("fiber degree exceeds the cap");
    fiber_search search(b, *lc, false);
    search.run_level(0);
    for (const auto& x : search.found)
        if (!(apply_map(table_for(b.n), x) == b))
            throw std::logic_error("fiber search produced an invalid element");
    return search.found;
}

namespace {

std::string counts_text(const std::vector<long long>& v) {
    std::string out = "(";
    for (size_t k = 0; k < v.size(); ++k) {
        if (k) out += ",";
        out += std::to_string(v[k]);
    }
    return out + ")";
}

}  // namespace

verification_report verify_nonnormality() {
    verification_report rep;
    const imset& b = fixtures::b5();
    const statement_table& tab = table_for(5);
    {
        // b is the image of the defining combination beta + 4.5|23 - 2.3|45
        std::vector<long long> x = fixtures::beta5();
        x[tab.ordinal(parse_statement("4.5|23"))] += 1;
        x[tab.ordinal(parse_statement("2.3|45"))] -= 1;
        rep.add("thm41/b_image_of_reference_combination", "true",
                apply_map(tab, x) == b ? "true" : "false");
    }
    rep.add("thm41/b_structural", "true", is_structural(b) ? "true" : "false");
    auto lc = level_counts(b);
    rep.add("thm41/level_counts_b", "(0,4,4,0)", lc ? counts_text(*lc) : "infeasible");
    rep.add("thm41/b_not_combinatorial", "none", is_combinatorial(b) ? "witness" : "none");
    imset b2 = 2 * b;
    auto witness = is_combinatorial(b2);
    rep.add("thm41/2b_combinatorial", "witness", witness ? "witness" : "none");
    rep.add("thm41/reference_witness_verifies", "true",
            apply_map(tab, fixtures::witness_2b()) == b2 ? "true" : "false");

    // cone {(z,u) >= 0 : A z - b u = 0}
    rat_mat E(1 << 5, gamma(5) + 1);
    for (int c = 0; c < tab.size(); ++c) {
        imset e = elementary_imset(tab.at(c), 5);
        for (subset s = 0; s < e.c.size(); ++s)
            if (e.c[s]) E.at(static_cast<int>(s), c) = static_cast<long>(e.c[s]);
    }
    for (subset s = 0; s < b.c.size(); ++s)
        if (b.c[s]) E.at(static_cast<int>(s), gamma(5)) = static_cast<long>(-b.c[s]);
    rep.add("thm41/homogenized_cone_dim", "1", std::to_string(cone_dimension(E)));
    auto ray = single_ray_generator(E);
    std::vector<long long> expect(gamma(5) + 1, 0);
    for (size_t k = 0; k < fixtures::alpha5().size(); ++k)
        expect[k] = fixtures::alpha5()[k] + fixtures::beta5()[k];
    expect[gamma(5)] = 2;
    std::vector<long long> got;
    if (ray)
        for (const rat& v : *ray) got.push_back(static_cast<long long>(v.get_num().get_si()));
    rep.add("thm41/ray_generator", counts_text(expect), ray ? counts_text(got) : "not a single ray");
    return rep;
}

}  // namespace sg
