#include <doctest.h>

#include <stdexcept>

#include <random>

#include "semigraphoid/fixtures.hpp"
#include "semigraphoid/rank_tests.hpp"
#include "semigraphoid/semigraphoid.hpp"

using namespace sg;

TEST_CASE("edge statements") {
    permutation sigma{4, 5, 1, 2, 3};
    CHECK(statement_text(edge_statement(sigma, 1)) == "4.5|");
    CHECK(statement_text(edge_statement(sigma, 4)) == "2.3|145");
    CHECK(statement_text(edge_statement(permutation{1, 2, 3, 4}, 1)) == "1.2|");
    CHECK_THROWS_AS(edge_statement(sigma, 5), std::out_of_range);
}

TEST_CASE("rank test of M matches the reference partition") {
    rank_partition part = rank_test(fixtures::m4());
    CHECK(partition_text(part) == partition_text(fixtures::figure1_partition()));
    int singles = 0, pairs = 0;
    for (const auto& cls : part.classes) {
        if (cls.size() == 1) ++singles;
        else if (cls.size() == 2) ++pairs;
    }
    CHECK(singles == 8);
    CHECK(pairs == 8);
}

TEST_CASE("rank test of the full set is one class") {
    rank_partition part = rank_test(full_set(4));
    REQUIRE(part.classes.size() == 1);
    CHECK(part.classes[0].size() == 24);
}

TEST_CASE("gamma's partition has eight 12-classes and six 4-classes") {
    rank_partition part = rank_test(fixtures::gamma5());
    CHECK(part.classes.size() == 14);
    int twelve = 0, four = 0;
    for (const auto& cls : part.classes) {
        if (cls.size() == 12) ++twelve;
        if (cls.size() == 4) ++four;
    }
    CHECK(twelve == 8);
    CHECK(four == 6);
    CHECK(partition_text(part) == partition_text(fixtures::gamma5_classes()));
}

TEST_CASE("statements of a partition round trip") {
    CHECK(statements_of_partition(fixtures::gamma5_classes()) == fixtures::gamma5());
    CHECK(statements_of_partition(rank_test(fixtures::m4())) == fixtures::m4());
    // all-singleton partition generates nothing
    rank_partition singles;
    singles.n = 3;
    for (const auto& w : symmetric_group(3)) singles.classes.push_back({w});
    CHECK(statements_of_partition(singles).count() == 0);
}

TEST_CASE("round trip is contraction on random semigraphoids") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 100; ++trial) {
        statement_set s(4);
        for (int c = 0; c < gamma(4); ++c)
            if (rng() % 7 == 0) s.set(c);
        statement_set cl = closure(s);
        rank_partition part = rank_test(cl);
        CHECK(statements_of_partition(part).subset_of(cl));
        for (const auto& cls : part.classes) CHECK(poset_of_class(4, cls).preconvex);
    }
}

TEST_CASE("class posets") {
    // {4123, 4132}: covers 4<1, 1<2, 1<3; extensions equal the class
    class_poset p = poset_of_class(4, {{4, 1, 2, 3}, {4, 1, 3, 2}});
    CHECK(p.preconvex);
    std::set<std::pair<int, int>> covers(p.covers.begin(), p.covers.end());
    CHECK(covers == std::set<std::pair<int, int>>{{4, 1}, {1, 2}, {1, 3}});
    // a singleton class is a chain with n-1 covers
    class_poset chain = poset_of_class(4, {{2, 4, 1, 3}});
    CHECK(chain.covers.size() == 3);
    CHECK(chain.preconvex);
    // class 15|234 has the 6-cover bowtie
    rank_partition gam = fixtures::gamma5_classes();
    for (const auto& cls : gam.classes)
        if (cls.size() == 12 && cls.front() == permutation{1, 5, 2, 3, 4}) {
            class_poset q = poset_of_class(5, cls);
            CHECK(q.covers.size() == 6);
            CHECK(q.preconvex);
        }
}

TEST_CASE("simpliciality") {
    CHECK(is_simplicial(fixtures::m4()));
    CHECK(!is_simplicial(fixtures::gamma5()));
    CHECK(is_simplicial(statement_set(4)));  // the finest test: braid cones
}

TEST_CASE("simpliciality oracle agrees with the primary criterion") {
    std::mt19937_64 rng(909);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        statement_set s(4);
        for (int c = 0; c < gamma(4); ++c)
            if (rng() % 6 == 0) s.set(c);
        statement_set cl = closure(s);
        for (const auto& cls : rank_test(cl).classes) {
            class_poset p = poset_of_class(4, cls);
            REQUIRE(p.preconvex);
            bool primary = static_cast<int>(p.covers.size()) == 3 && order_cone_lineality_dim(p) == 1;
            CHECK(primary == simplicial_oracle(p));
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("gamma partition is stabilizer-invariant") {
    const statement_table& tab = table_for(5);
    const statement_set& g = fixtures::gamma5();
    permutation sigma{5, 3, 4, 2, 1};  // swaps 1,5 and permutes 2,3,4
    statement_set img(5);
    for (int c : g.members()) img.set(tab.ordinal(apply_permutation(sigma, tab.at(c))));
    CHECK(img == g);
    CHECK(partition_text(rank_test(img)) == partition_text(fixtures::gamma5_classes()));
}

TEST_CASE("partition text round trip") {
    const rank_partition& p = fixtures::gamma5_classes();
    CHECK(partition_text(parse_partition(partition_text(p), 5)) == partition_text(p));
    CHECK_THROWS_AS(parse_partition("123\n", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("1123\n", 4), std::invalid_argument);
}
