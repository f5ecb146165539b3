#include <doctest.h>

#include <stdexcept>

#include <set>

#include "semigraphoid/axioms.hpp"
#include "semigraphoid/fixtures.hpp"
#include "semigraphoid/imset.hpp"

using namespace sg;

TEST_CASE("axiom counts") {
    CHECK(generate_axioms(2).empty());
    CHECK(generate_axioms(3).size() == 3);
    CHECK(generate_axioms(4).size() == 24);
    CHECK(generate_axioms(5).size() == 120);
    CHECK(generate_axioms(6).size() == 3 * 20 * 8);
}

TEST_CASE("axiom signed vectors lie in the kernel") {
    for (int n = 3; n <= 5; ++n) {
        const statement_table& tab = table_for(n);
        for (const auto& e : generate_axioms(n)) {
            imset v = elementary_imset(tab.at(e.x), n);
            v += elementary_imset(tab.at(e.y), n);
            v -= elementary_imset(tab.at(e.z), n);
            v -= elementary_imset(tab.at(e.w), n);
            CHECK(v.is_zero());
        }
    }
}

TEST_CASE("axioms are canonical and duplicate-free") {
    for (int n = 3; n <= 5; ++n) {
        const auto& axioms = generate_axioms(n);
        std::set<axiom_equation> unique(axioms.begin(), axioms.end());
        CHECK(unique.size() == axioms.size());
        for (const auto& e : axioms) {
            CHECK(e.x < e.y);
            CHECK(e.z < e.w);
            CHECK(std::pair(e.x, e.y) <= std::pair(e.z, e.w));
        }
    }
}

TEST_CASE("n=5 axioms equal the reference list as canonical multisets") {
    const auto& gen = generate_axioms(5);
    auto ref = fixtures::axioms5();
    std::multiset<axiom_equation> a(gen.begin(), gen.end()), b(ref.begin(), ref.end());
    CHECK(a == b);
}

TEST_CASE("n=4 axioms equal the reference list as an unordered set") {
    const auto& gen = generate_axioms(4);
    auto ref = fixtures::axioms4();
    std::set<axiom_equation> a(gen.begin(), gen.end()), b(ref.begin(), ref.end());
    CHECK(a == b);
    CHECK(fixtures::marked_axioms4().size() == 4);
}

TEST_CASE("n=3 axioms are the three two-by-two minor relations") {
    const statement_table& tab = table_for(3);
    std::set<std::string> got;
    for (const auto& e : generate_axioms(3)) got.insert(axiom_text(e, tab));
    std::set<std::string> expect{
        "1.2| + 1.3|2 = 1.3| + 1.2|3",
        "1.2| + 2.3|1 = 2.3| + 1.2|3",
        "1.3| + 2.3|1 = 2.3| + 1.3|2",
    };
    CHECK(got == expect);
}

TEST_CASE("axiom text parses back") {
    const statement_table& tab = table_for(5);
    for (const auto& e : generate_axioms(5)) CHECK(parse_axiom(axiom_text(e, tab), tab) == e);
}
