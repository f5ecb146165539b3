#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <array>
#include <random>

#include "semigraphoid/fixtures.hpp"
#include "semigraphoid/imset.hpp"
#include "semigraphoid/submodular.hpp"

using namespace sg;

TEST_CASE("M is not submodular; certificate is the four marked equations") {
    auto res = is_submodular(fixtures::m4());
    CHECK(!res.submodular);
    REQUIRE(res.certificate.has_value());
    std::vector<int> support;
    for (const auto& t : res.certificate->terms) {
        support.push_back(t.axiom_index);
        CHECK(std::abs(t.coeff) == 1);
    }
    std::sort(support.begin(), support.end());
    auto marked = fixtures::marked_axioms4();
    std::sort(marked.begin(), marked.end());
    CHECK(support == marked);
}

TEST_CASE("gamma is not submodular; certificate avoids uninformative rows") {
    const statement_set& g = fixtures::gamma5();
    auto res = is_submodular(g);
    CHECK(!res.submodular);
    REQUIRE(res.certificate.has_value());
    const auto& axioms = generate_axioms(5);
    for (const auto& t : res.certificate->terms) {
        auto cls = classify_axiom(axioms[t.axiom_index], [&](int c) { return g.test(c); });
        bool informative = cls == axiom_class::opposite_pair || cls == axiom_class::one_inside;
        CHECK(informative);
    }
}

TEST_CASE("full set is submodular with the zero witness") {
    auto res = is_submodular(full_set(4));
    CHECK(res.submodular);
    for (const rat& v : res.primal_witness) CHECK(v == 0);
}

TEST_CASE("empty set is submodular; the negated square functional is one dual witness") {
    statement_set empty(4);
    auto res = is_submodular(empty);
    CHECK(res.submodular);
    // w(S) = -|S|^2 satisfies <A_c, w> = 2 for every statement
    const statement_table& tab = table_for(4);
    rat_vec w(1 << 4);
    for (subset s = 0; s < w.size(); ++s) w[s] = -static_cast<long>(popcount(s) * popcount(s));
    for (int c = 0; c < tab.size(); ++c) {
        imset e = elementary_imset(tab.at(c), 4);
        rat acc = 0;
        for (subset s = 0; s < e.c.size(); ++s) acc += static_cast<long>(e.c[s]) * w[s];
        CHECK(acc == 2);
    }
    // and the returned witness separates exactly
    for (int c = 0; c < tab.size(); ++c) {
        imset e = elementary_imset(tab.at(c), 4);
        rat acc = 0;
        for (subset s = 0; s < e.c.size(); ++s) acc += static_cast<long>(e.c[s]) * res.dual_witness[s];
        CHECK(acc >= 1);
    }
}

TEST_CASE("non-semigraphoid inputs are rejected") {
    statement_set s = parse_statement_set("1.2|\n2.3|1\n", 3);
    CHECK_THROWS_AS(is_submodular(s), std::invalid_argument);
}

TEST_CASE("dual witness separates exactly on submodular inputs") {
    std::mt19937_64 rng(777);
    const statement_table& tab = table_for(4);
    int seen = 0;
    for (int trial = 0; trial < 60 && seen < 25; ++trial) {
        statement_set s(4);
        for (int c = 0; c < gamma(4); ++c)
            if (rng() % 8 == 0) s.set(c);
        statement_set cl = closure(s);
        auto res = is_submodular(cl);
        if (!res.submodular) continue;
        ++seen;
        for (int c = 0; c < tab.size(); ++c) {
            imset e = elementary_imset(tab.at(c), 4);
            rat acc = 0;
            for (subset sub = 0; sub < e.c.size(); ++sub)
                acc += static_cast<long>(e.c[sub]) * res.dual_witness[sub];
            if (cl.test(c)) CHECK(acc == 0);
            else CHECK(acc >= 1);
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("intersections of submodular semigraphoids stay submodular") {
    std::mt19937_64 rng(31337);
    int done = 0;
    for (int trial = 0; trial < 80 && done < 20; ++trial) {
        statement_set a(4), b(4);
        for (int c = 0; c < gamma(4); ++c) {
            if (rng() % 8 == 0) a.set(c);
            if (rng() % 8 == 0) b.set(c);
        }
        statement_set ca = closure(a), cb = closure(b);
        if (!is_submodular_dual(ca) || !is_submodular_dual(cb)) continue;
        ++done;
        CHECK(is_submodular_dual(ca & cb));
    }
    CHECK(done > 0);
}

TEST_CASE("gamma stays fixed and non-submodular under its stabilizer") {
    const statement_set& g = fixtures::gamma5();
    const statement_table& tab = table_for(5);
    // the stabilizer: sigma maps {1,5} within {1,5} and {2,3,4} within {2,3,4}
    std::vector<permutation> stab;
    std::vector<std::array<int, 2>> p15{{1, 5}, {5, 1}};
    std::vector<std::array<int, 3>> p234{{2, 3, 4}, {2, 4, 3}, {3, 2, 4}, {3, 4, 2}, {4, 2, 3}, {4, 3, 2}};
    for (const auto& a : p15)
        for (const auto& b : p234) {
            permutation sigma(5);
            sigma[0] = a[0];
            sigma[4] = a[1];
            sigma[1] = b[0];
            sigma[2] = b[1];
            sigma[3] = b[2];
            stab.push_back(sigma);
        }
    CHECK(stab.size() == 12);
    for (const auto& sigma : stab) {
        statement_set img(5);
        for (int c : g.members()) img.set(tab.ordinal(apply_permutation(sigma, tab.at(c))));
        CHECK(img == g);
        CHECK(!is_submodular_dual(img));
    }
}
