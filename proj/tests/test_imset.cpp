#include <doctest.h>

#include <stdexcept>

#include <random>

#include "semigraphoid/fixtures.hpp"
#include "semigraphoid/imset.hpp"

using namespace sg;

TEST_CASE("elementary imset of 1.2| over n=3") {
    imset b = elementary_imset(parse_statement("1.2|"), 3);
    CHECK(b[mask_of({1})] == 1);
    CHECK(b[mask_of({2})] == 1);
    CHECK(b[0] == -1);
    CHECK(b[mask_of({1, 2})] == -1);
    long long sum = 0;
    for (auto v : b.c) sum += v;
    CHECK(sum == 0);
}

TEST_CASE("every elementary imset sums to zero and grades to -2") {
    for (int n = 3; n <= 5; ++n) {
        const statement_table& tab = table_for(n);
        for (int c = 0; c < tab.size(); ++c) {
            imset b = elementary_imset(tab.at(c), n);
            long long sum = 0, quad = 0;
            for (subset s = 0; s < b.c.size(); ++s) {
                sum += b[s];
                quad += b[s] * popcount(s) * popcount(s);
            }
            CHECK(sum == 0);
            CHECK(quad == -2);
            CHECK(degree_functional(b) == 1);
        }
    }
}

TEST_CASE("level counts of elementary imsets are unit vectors") {
    const statement_table& tab = table_for(4);
    for (int c = 0; c < tab.size(); ++c) {
        auto lc = level_counts(elementary_imset(tab.at(c), 4));
        REQUIRE(lc.has_value());
        for (int t = 0; t <= 2; ++t) CHECK((*lc)[t] == (t == tab.level(c) ? 1 : 0));
    }
}

TEST_CASE("level counts: zero, e_empty, fixture b") {
    CHECK(*level_counts(imset(5)) == std::vector<long long>{0, 0, 0, 0});
    imset e_empty(5);
    e_empty[0] = 1;
    CHECK(!level_counts(e_empty).has_value());
    CHECK(*level_counts(fixtures::b5()) == std::vector<long long>{0, 4, 4, 0});
}

TEST_CASE("degree functional equals total level count on random images") {
    std::mt19937_64 rng(20240601);
    const statement_table& tab = table_for(4);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<long long> x(tab.size(), 0);
        int terms = static_cast<int>(rng() % 7);
        for (int t = 0; t < terms; ++t) ++x[rng() % tab.size()];
        imset b = apply_map(tab, x);
        auto lc = level_counts(b);
        REQUIRE(lc.has_value());
        long long total = 0;
        for (auto v : *lc) total += v;
        CHECK(degree_functional(b) == total);
        CHECK(total == terms);
    }
}

TEST_CASE("imset text round trip") {
    imset b = parse_imset("-1 2\n2 123\n1 0\n", 5);
    CHECK(b[mask_of({2})] == -1);
    CHECK(b[mask_of({1, 2, 3})] == 2);
    CHECK(b[0] == 1);
    CHECK(parse_imset(imset_text(b), 5) == b);
    CHECK(imset_text(parse_imset(imset_text(fixtures::b5()), 5)) == imset_text(fixtures::b5()));
}
