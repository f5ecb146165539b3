#include "semigraphoid/submodular.hpp"

#include <algorithm>
#include <stdexcept>

#include "semigraphoid/imset.hpp"
#include "semigraphoid/simplex.hpp"

namespace sg {

namespace {

// primal system: variables = statements off M with bound >= 1, axiom rows = 0
feasibility_problem primal_problem(const statement_set& s, const std::vector<int>& off) {
    const auto& axioms = generate_axioms(s.n);
    std::vector<int> col_of(gamma(s.n), -1);
    for (size_t k = 0; k < off.size(); ++k) col_of[off[k]] = static_cast<int>(k);
    feasibility_problem p;
    p.E = rat_mat(static_cast<int>(axioms.size()), static_cast<int>(off.size()));
    p.f.assign(axioms.size(), rat(0));
    p.lower.assign(off.size(), rat(1));
    for (size_t r = 0; r < axioms.size(); ++r) {
        const auto& e = axioms[r];
        auto put = [&](int ord, int sign) {
            if (col_of[ord] >= 0) p.E.at(static_cast<int>(r), col_of[ord]) += sign;
        };
        put(e.x, +1);
        put(e.y, +1);
        put(e.z, -1);
        put(e.w, -1);
    }
    return p;
}

// dual system: w over 2^n subsets, <A_c, w> = 0 on M, >= 1 off M
feasibility_problem dual_problem(const statement_set& s) {
    const statement_table& tab = table_for(s.n);
    int nsub = 1 << s.n;
    lp_builder lp(nsub);
    for (int c = 0; c < gamma(s.n); ++c) {
        const ci_statement& st = tab.at(c);
        subset bi = 1u << (st.i - 1), bj = 1u << (st.j - 1);
        lp_builder::row row{{static_cast<int>(st.K | bi), rat(1)},
                            {static_cast<int>(st.K | bj), rat(1)},
                            {static_cast<int>(st.K), rat(-1)},
                            {static_cast<int>(st.K | bi | bj), rat(-1)}};
        if (s.test(c)) lp.add_eq(row, rat(0));
        else lp.add_ge(row, rat(1));
    }
    return lp.build();
}

// Certificate-space feasibility: does a Farkas certificate supported on
// `support` (axiom rows, off-M columns) exist?  Certificate LP: y_r free on
// the support, u_c >= 0 slack per off column, sum_r y_r E[r][c] + u_c = 0,
// normalization sum_c u_c = 1.  Returns y when feasible.
struct cert_space {
    const std::vector<axiom_equation>* axioms;
    std::vector<int> off;
    std::vector<int> col_of;  // ordinal -> off index or -1

    int entry(int row, int c) const {  // restricted coefficient
        const auto& e = (*axioms)[row];
        int v = 0;
        if (e.x == off[c]) ++v;
        if (e.y == off[c]) ++v;
        if (e.z == off[c]) --v;
        if (e.w == off[c]) --v;
        return v;
    }

    std::optional<rat_vec> solve_on(const std::vector<int>& support) const {
        int m = static_cast<int>(support.size());
        // untouched off-columns force u_c = 0; restrict the LP to touched ones
        std::vector<int> touched;
        {
            std::vector<char> seen(off.size(), 0);
            for (int r : support) {
                const auto& e = (*axioms)[r];
                for (int ord : {e.x, e.y, e.z, e.w})
                    if (col_of[ord] >= 0) seen[col_of[ord]] = 1;
            }
            for (size_t c = 0; c < off.size(); ++c)
                if (seen[c]) touched.push_back(static_cast<int>(c));
        }
        int k = static_cast<int>(touched.size());
        if (k == 0) return std::nullopt;
        lp_builder lp(m + k);
        for (int r = 0; r < m; ++r) lp.set_free(r);
        for (int c = 0; c < k; ++c) lp.set_lower(m + c, rat(0));
        for (int c = 0; c < k; ++c) {
            lp_builder::row row;
            for (int r = 0; r < m; ++r) {
                int v = entry(support[r], touched[c]);
                if (v != 0) row.emplace_back(r, rat(v));
            }
            row.emplace_back(m + c, rat(1));
            lp.add_eq(row, rat(0));
        }
        lp_builder::row norm;
        for (int c = 0; c < k; ++c) norm.emplace_back(m + c, rat(1));
        lp.add_eq(norm, rat(1));
        auto res = solve_feasibility(lp.build());
        if (!res.feasible()) return std::nullopt;
        return rat_vec(res.witness.begin(), res.witness.begin() + m);
    }
};

// minimum-cardinality, lexicographically-first certifying support; greedy
// fallback (all-outside rows pruned first) when the exhaustive budget runs out
std::vector<int> canonical_support(const cert_space& cs, const statement_set& s) {
    int nrows = static_cast<int>(cs.axioms->size());
    auto in_set = [&](int ord) { return s.test(ord); };

    std::vector<int> candidates;
    for (int r = 0; r < nrows; ++r) {
        const auto& e = (*cs.axioms)[r];
        auto cls = classify_axiom(e, in_set);
        if (cls != axiom_class::all_inside) candidates.push_back(r);
    }

    // greedy pass: remove all-outside rows first, then canonical order
    std::vector<int> greedy = candidates;
    std::vector<int> removal_order;
    for (int r : candidates)
        if (classify_axiom((*cs.axioms)[r], in_set) == axiom_class::all_outside) removal_order.push_back(r);
    for (int r : candidates)
        if (classify_axiom((*cs.axioms)[r], in_set) != axiom_class::all_outside) removal_order.push_back(r);
    for (int r : removal_order) {
        std::vector<int> trial;
        for (int q : greedy)
            if (q != r) trial.push_back(q);
        if (cs.solve_on(trial)) greedy = std::move(trial);
    }

    // exhaustive lex-first search by increasing size, within a budget
    const long budget = 60000;
    long spent = 0;
    int ncand = static_cast<int>(candidates.size());
    for (int size = 1; size <= std::min<int>(6, static_cast<int>(greedy.size())); ++size) {
        std::vector<int> pick(size);
        std::vector<int> best;
        auto rec = [&](auto&& self, int from, int depth) -> bool {
            if (depth == size) {
                ++spent;
                std::vector<int> sup(size);
                for (int t = 0; t < size; ++t) sup[t] = candidates[pick[t]];
                return cs.solve_on(sup).has_value();
            }
            for (int p = from; p < ncand - (size - depth - 1); ++p) {
                if (spent > budget) return false;
                pick[depth] = p;
                if (self(self, p + 1, depth + 1)) return true;
            }
            return false;
        };
        double combos = 1;
        for (int t = 0; t < size; ++t) combos *= double(ncand - t) / (t + 1);
        if (combos > double(budget - spent)) break;
        if (rec(rec, 0, 0)) {
            std::vector<int> sup(size);
            for (int t = 0; t < size; ++t) sup[t] = candidates[pick[t]];
            return sup;
        }
    }
    return greedy;
}

submodular_certificate canonicalize_certificate(const statement_set& s,
                                                const std::vector<int>& off) {
    cert_space cs;
    cs.axioms = &generate_axioms(s.n);
    cs.off = off;
    cs.col_of.assign(gamma(s.n), -1);
    for (size_t k = 0; k < off.size(); ++k) cs.col_of[off[k]] = static_cast<int>(k);

    std::vector<int> support = canonical_support(cs, s);
    auto y = cs.solve_on(support);
    if (!y) throw std::logic_error("certificate canonicalization lost feasibility");
    rat_vec scaled = primitive_integer_vector(*y);

    submodular_certificate cert;
    cert.n = s.n;
    cert.aggregated.assign(gamma(s.n), 0);
    for (size_t r = 0; r < support.size(); ++r) {
        if (scaled[r] == 0) continue;
        long long coeff = static_cast<long long>(scaled[r].get_num().get_si());
        cert.terms.push_back({support[r], coeff});
        const auto& e = (*cs.axioms)[support[r]];
        cert.aggregated[e.x] -= coeff;
        cert.aggregated[e.y] -= coeff;
        cert.aggregated[e.z] += coeff;
        cert.aggregated[e.w] += coeff;
    }
    // drop the on-M coordinates; the contradiction lives off M
    for (int ord = 0; ord < gamma(s.n); ++ord)
        if (s.test(ord)) cert.aggregated[ord] = 0;
    for (long long v : cert.aggregated)
        if (v < 0) throw std::logic_error("canonical certificate aggregation has a negative entry");
    return cert;
}

}  // namespace

bool is_submodular_primal(const statement_set& s) {
    std::vector<int> off;
    for (int c = 0; c < gamma(s.n); ++c)
        if (!s.test(c)) off.push_back(c);
    if (off.empty()) return true;
    return solve_feasibility(primal_problem(s, off)).feasible();
}

bool is_submodular_dual(const statement_set& s) {
    return solve_feasibility(dual_problem(s)).feasible();
}

submodular_result is_submodular(const statement_set& s) {
    if (!is_semigraphoid(s)) throw std::invalid_argument("is_submodular: input is not a semigraphoid");
    std::vector<int> off;
    for (int c = 0; c < gamma(s.n); ++c)
        if (!s.test(c)) off.push_back(c);

    submodular_result out;
    auto dual = solve_feasibility(dual_problem(s));
    if (off.empty()) {
        // full statement set: the zero solution is tight everywhere
        out.submodular = true;
        if (!dual.feasible()) throw std::logic_error("primal/dual submodularity disagreement");
        out.dual_witness.assign(dual.witness.begin(), dual.witness.begin() + (1 << s.n));
        out.primal_witness.assign(gamma(s.n), rat(0));
        return out;
    }
    auto primal = solve_feasibility(primal_problem(s, off));
    if (primal.feasible() != dual.feasible())
        throw std::logic_error("primal/dual submodularity disagreement");
    out.submodular = primal.feasible();
    if (out.submodular) {
        out.dual_witness.assign(dual.witness.begin(), dual.witness.begin() + (1 << s.n));
        out.primal_witness.assign(gamma(s.n), rat(0));
        for (size_t k = 0; k < off.size(); ++k) out.primal_witness[off[k]] = primal.witness[k];
    } else {
        out.certificate = canonicalize_certificate(s, off);
    }
    return out;
}

long count_submodular(int n, int threads) {
    std::vector<std::uint32_t> masks;
    enumerate_semigraphoids(n, threads, [&](std::uint32_t m) { masks.push_back(m); });
    long count = 0;
    for (std::uint32_t m : masks)
        if (is_submodular_dual(from_mask32(n, m))) ++count;
    return count;
}

std::string certificate_report(const statement_set& s, const submodular_certificate& cert) {
    const statement_table& tab = table_for(s.n);
    const auto& axioms = generate_axioms(s.n);
    std::string out = "certificate: nonnegative combination of axiom equations\n";
    for (const auto& term : cert.terms) {
        const auto& e = axioms[term.axiom_index];
        long long c = term.coeff;
        axiom_equation oriented = e;
        if (c < 0) {
            c = -c;
            std::swap(oriented.x, oriented.z);
            std::swap(oriented.y, oriented.w);
        }
        out += "  " + std::to_string(c) + " * ( " + axiom_text(oriented, tab) + " )\n";
    }
    out += "forces: ";
    bool first = true;
    for (int ord = 0; ord < gamma(s.n); ++ord) {
        if (cert.aggregated[ord] == 0) continue;
        if (!first) out += " + ";
        first = false;
        if (cert.aggregated[ord] != 1) out += std::to_string(cert.aggregated[ord]) + "*";
        out += statement_text(tab.at(ord));
    }
    out += " <= 0, contradicting strict positivity off the set\n";
    return out;
}

}  // namespace sg
