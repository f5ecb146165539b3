#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <functional>
#include <random>

#include "semigraphoid/fiber.hpp"
#include "semigraphoid/fixtures.hpp"

using namespace sg;

TEST_CASE("structural membership") {
    CHECK(is_structural(fixtures::b5()));
    CHECK(is_structural(imset(5)));
    imset e_empty(5);
    e_empty[0] = 1;
    CHECK(!is_structural(e_empty));
    // elementary imsets are trivially structural and combinatorial
    const statement_table& tab = table_for(5);
    imset e = elementary_imset(tab.at(17), 5);
    CHECK(is_structural(e));
    auto w = is_combinatorial(e);
    REQUIRE(w.has_value());
    CHECK((*w)[17] == 1);
    long long total = 0;
    for (auto v : *w) total += v;
    CHECK(total == 1);
}

TEST_CASE("b is structural but not combinatorial; 2b is combinatorial") {
    const imset& b = fixtures::b5();
    CHECK(!is_combinatorial(b).has_value());
    imset b2 = 2 * b;
    auto w = is_combinatorial(b2);
    REQUIRE(w.has_value());
    CHECK(apply_map(table_for(5), *w) == b2);
    CHECK(apply_map(table_for(5), fixtures::witness_2b()) == b2);
}

TEST_CASE("the move g has the two-element fiber") {
    const markov_move& g = fixtures::g5();
    auto fib = enumerate_fiber(apply_map(table_for(5), g.plus()));
    REQUIRE(fib.size() == 2);
    std::vector<std::vector<long long>> expect{g.plus(), g.minus()};
    std::sort(fib.begin(), fib.end());
    std::sort(expect.begin(), expect.end());
    CHECK(fib == expect);
    for (const auto& x : fib) {
        long long deg = 0;
        for (auto v : x) deg += v;
        CHECK(deg == 10);
    }
}

TEST_CASE("fiber of zero is the single empty combination") {
    auto fib = enumerate_fiber(imset(4));
    REQUIRE(fib.size() == 1);
    for (auto v : fib[0]) CHECK(v == 0);
}

TEST_CASE("degree cap is enforced") {
    imset big = apply_map(table_for(4), std::vector<long long>(gamma(4), 1));
    CHECK_THROWS_AS(enumerate_fiber(big, 4), std::invalid_argument);
}

TEST_CASE("fiber enumeration equals the degree-bounded brute force on random n=3 targets") {
    std::mt19937_64 rng(606060);
    const statement_table& tab = table_for(3);
    for (int trial = 0; trial < 100; ++trial) {
        int deg = static_cast<int>(rng() % 5);
        std::vector<long long> x(gamma(3), 0);
        for (int d = 0; d < deg; ++d) ++x[rng() % gamma(3)];
        imset b = apply_map(tab, x);
        auto fib = enumerate_fiber(b);
        std::vector<std::vector<long long>> brute;
        std::vector<long long> y(gamma(3), 0);
        std::function<void(int, int)> iter = [&](int from, int left) {
            if (left == 0) {
                if (apply_map(tab, y) == b) brute.push_back(y);
                return;
            }
            for (int c = from; c < gamma(3); ++c) {
                ++y[c];
                iter(c, left - 1);
                --y[c];
            }
        };
        iter(0, deg);
        std::sort(fib.begin(), fib.end());
        std::sort(brute.begin(), brute.end());
        CHECK(fib == brute);
    }
}

TEST_CASE("fiber elements grade to the forced level counts") {
    const markov_move& g = fixtures::g5();
    imset b = apply_map(table_for(5), g.plus());
    auto lc = level_counts(b);
    REQUIRE(lc.has_value());
    const statement_table& tab = table_for(5);
    for (const auto& x : enumerate_fiber(b)) {
        std::vector<long long> got(4, 0);
        for (int c = 0; c < tab.size(); ++c) got[tab.level(c)] += x[c];
        CHECK(got == *lc);
    }
}

TEST_CASE("nonnormality bundle passes") {
    auto rep = verify_nonnormality();
    for (const auto& c : rep.checks) {
        INFO(c.name, " expected=", c.expected, " actual=", c.actual);
        CHECK(c.pass);
    }
}
