#include <doctest.h>

#include <stdexcept>

#include <functional>
#include <set>

#include "semigraphoid/fixtures.hpp"
#include "semigraphoid/markov.hpp"

using namespace sg;

TEST_CASE("cubics and the quartic are kernel moves") {
    for (const auto& c : fixtures::cubics4()) CHECK(in_kernel(c));
    CHECK(in_kernel(fixtures::quartic4()));
    markov_move unit{4, std::vector<long long>(gamma(4), 0)};
    unit.v[3] = 1;
    CHECK(!in_kernel(unit));
}

TEST_CASE("indispensability of the named moves") {
    CHECK(is_indispensable(fixtures::g5()));
    for (const auto& c : fixtures::cubics4()) CHECK(is_indispensable(c));
    CHECK(is_indispensable(fixtures::quartic4()));
    // each n=3 axiom quadric
    for (const auto& e : generate_axioms(3)) {
        markov_move m{3, std::vector<long long>(gamma(3), 0)};
        m.v[e.x] += 1;
        m.v[e.y] += 1;
        m.v[e.z] -= 1;
        m.v[e.w] -= 1;
        CHECK(is_indispensable(m));
    }
}

TEST_CASE("orbits") {
    // the quartic's relabeling orbit: computed size 3 (stabilizer of order 8
    // in the signed group); kernel membership throughout
    auto orb = orbit(fixtures::quartic4());
    CHECK(orb.size() == 3);
    for (const auto& v : orb) {
        markov_move m{4, v};
        CHECK(in_kernel(m));
        CHECK(is_indispensable(m));
    }
    // the four cubics form a single orbit
    auto corb = orbit(fixtures::cubics4()[0]);
    CHECK(corb.size() == 4);
    std::set<std::vector<long long>> expect;
    for (const auto& c : fixtures::cubics4()) expect.insert(canonical_sign(c.v));
    CHECK(corb == expect);
    // the three n=3 quadrics form a single orbit
    markov_move q3{3, std::vector<long long>(gamma(3), 0)};
    const auto& e = generate_axioms(3)[0];
    q3.v[e.x] += 1;
    q3.v[e.y] += 1;
    q3.v[e.z] -= 1;
    q3.v[e.w] -= 1;
    CHECK(orbit(q3).size() == 3);
}

TEST_CASE("orbit sizes divide twice the group order") {
    for (const auto& mv : {fixtures::quartic4(), fixtures::cubics4()[0]}) {
        auto orb = orbit(mv);
        CHECK((2 * 24) % orb.size() == 0);
    }
}

TEST_CASE("degree-4 minimal generators: 21 two-element fibers") {
    const statement_table& tab = table_for(4);
    std::vector<markov_move> lower;
    for (const auto& e : generate_axioms(4)) {
        markov_move m{4, std::vector<long long>(gamma(4), 0)};
        m.v[e.x] += 1;
        m.v[e.y] += 1;
        m.v[e.z] -= 1;
        m.v[e.w] -= 1;
        lower.push_back(std::move(m));
    }
    for (const auto& c : fixtures::cubics4()) lower.push_back(c);

    std::set<std::vector<long long>> seen;
    int needed = 0;
    std::set<std::vector<long long>> quartic_moves;
    std::vector<long long> x(gamma(4), 0);
    std::function<void(int, int)> iter = [&](int from, int left) {
        if (left == 0) {
            imset b = apply_map(tab, x);
            if (!seen.insert(b.c).second) return;
            auto rep = connectivity_check(lower, {b});
            if (rep.fibers[0].components > 1) {
                needed += rep.fibers[0].components - 1;
                REQUIRE(rep.fibers[0].fiber_size == 2);
                auto fib = enumerate_fiber(b);
                std::vector<long long> mv(gamma(4));
                for (int c = 0; c < gamma(4); ++c) mv[c] = fib[0][c] - fib[1][c];
                quartic_moves.insert(canonical_sign(mv));
            }
            return;
        }
        for (int c = from; c < gamma(4); ++c) {
            ++x[c];
            iter(c, left - 1);
            --x[c];
        }
    };
    iter(0, 4);
    CHECK(needed == 21);
    CHECK(quartic_moves.size() == 21);
    // the displayed quartic's orbit sits inside; orbit decomposition 3+12+3+3
    for (const auto& v : orbit(fixtures::quartic4())) CHECK(quartic_moves.count(v) == 1);
    std::set<std::vector<long long>> left = quartic_moves;
    std::multiset<size_t> orbit_sizes;
    while (!left.empty()) {
        auto orb = orbit(markov_move{4, *left.begin()});
        orbit_sizes.insert(orb.size());
        for (const auto& v : orb) left.erase(v);
    }
    CHECK(orbit_sizes == std::multiset<size_t>{3, 3, 3, 12});
}

TEST_CASE("quadrics alone do not connect a cubic fiber") {
    std::vector<markov_move> quadrics;
    for (const auto& e : generate_axioms(4)) {
        markov_move m{4, std::vector<long long>(gamma(4), 0)};
        m.v[e.x] += 1;
        m.v[e.y] += 1;
        m.v[e.z] -= 1;
        m.v[e.w] -= 1;
        quadrics.push_back(std::move(m));
    }
    imset target = apply_map(table_for(4), fixtures::cubics4()[0].plus());
    auto rep = connectivity_check(quadrics, {target});
    CHECK(!rep.all_connected);
    CHECK(rep.fibers[0].fiber_size == 2);
    CHECK(rep.fibers[0].components == 2);
    // the fiber of zero is a single node
    auto rep0 = connectivity_check(quadrics, {imset(4)});
    CHECK(rep0.all_connected);
}

TEST_CASE("prime containment") {
    for (const auto& p : fixtures::primes4()) CHECK(prime_contains_axioms(p));
    CHECK(fixtures::primes4()[0].vars.count() == 12);
    CHECK(fixtures::primes4()[1].vars.count() == 15);
    CHECK(fixtures::primes4()[2].vars.count() == 16);
    monomial_prime empty{4, statement_set(4)};
    CHECK(!prime_contains_axioms(empty));
}

TEST_CASE("prime containment is stable under relabeling") {
    const statement_table& tab = table_for(4);
    for (const auto& p : fixtures::primes4()) {
        permutation sigma{2, 3, 4, 1};
        monomial_prime img{4, statement_set(4)};
        for (int c : p.vars.members()) img.vars.set(tab.ordinal(apply_permutation(sigma, tab.at(c))));
        CHECK(prime_contains_axioms(img));
    }
}

TEST_CASE("zero-one point counts") {
    auto [sg2, sub2] = count_01_points(2, 1);
    CHECK(sg2 == 2);
    CHECK(sub2 == 2);
    auto [sg3, sub3] = count_01_points(3, 1);
    CHECK(sg3 == 22);
    CHECK(sub3 == 22);
}

TEST_CASE("zero-one vectors of semigraphoids annihilate the axiom binomials") {
    CHECK(zero_one_point_annihilates(fixtures::m4()));
    CHECK(zero_one_point_annihilates(fixtures::gamma5()));
    CHECK(zero_one_point_annihilates(full_set(4)));
    statement_set bad = parse_statement_set("1.2|\n2.3|1\n", 3);
    CHECK(!zero_one_point_annihilates(bad));
}

TEST_CASE("move text round trip") {
    const markov_move& g = fixtures::g5();
    markov_move back = parse_move(move_text(g), 5);
    CHECK(back.v == g.v);
    CHECK(infer_move_ground_set(move_text(g)) == 5);
}
