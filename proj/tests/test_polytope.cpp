#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>

#include "semigraphoid/fixtures.hpp"
#include "semigraphoid/polytope.hpp"

using namespace sg;

TEST_CASE("standard simplex in dimension 3") {
    h_polytope h;
    h.dim = 3;
    for (int k = 0; k < 3; ++k) {
        rat_vec c(3, rat(0));
        c[k] = -1;
        h.rows.emplace_back(rat(0), c);
    }
    h.rows.emplace_back(rat(1), rat_vec{rat(1), rat(1), rat(1)});
    auto verts = vertices_from_facets(h);
    CHECK(verts.status == polytope_status::ok);
    CHECK(verts.vertices.size() == 4);
    auto lat = build_face_lattice(h, verts.vertices);
    CHECK(lat.f_vector == std::vector<int>{4, 6, 4});
}

TEST_CASE("a single inequality is unbounded") {
    h_polytope h;
    h.dim = 2;
    h.rows.emplace_back(rat(1), rat_vec{rat(1), rat(0)});
    CHECK(vertices_from_facets(h).status == polytope_status::unbounded);
}

TEST_CASE("an empty polytope is reported") {
    h_polytope h;
    h.dim = 1;
    h.rows.emplace_back(rat(0), rat_vec{rat(1)});
    h.rows.emplace_back(rat(-1), rat_vec{rat(-1)});  // x <= 0 and -x <= -1
    CHECK(vertices_from_facets(h).status == polytope_status::empty);
}

TEST_CASE("the ten-facet reference polytope") {
    const h_polytope& h = fixtures::polytope10();
    REQUIRE(h.rows.size() == 10);
    REQUIRE(h.lineality.size() == 1);
    auto verts = vertices_from_facets(h);
    REQUIRE(verts.status == polytope_status::ok);
    CHECK(verts.vertices.size() == 14);
    auto lat = build_face_lattice(h, verts.vertices);
    CHECK(lat.f_vector == std::vector<int>{14, 36, 32, 10});

    std::multiset<std::pair<int, int>> stats;
    for (const auto& s : lat.facet_stats) stats.insert({s[0], s[1]});
    std::multiset<std::pair<int, int>> expect{{4, 6}, {4, 6},  {7, 11}, {7, 11}, {7, 11},
                                              {7, 12}, {7, 12}, {7, 13}, {7, 13}, {7, 13}};
    CHECK(stats == expect);

    // the two-face counts close under Euler's relation per facet
    for (const auto& s : lat.facet_stats) CHECK(s[0] - s[1] + s[2] == 2);
}

TEST_CASE("polytope text round trip") {
    const h_polytope& h = fixtures::polytope10();
    h_polytope back = parse_polytope(polytope_text(h));
    CHECK(back.dim == h.dim);
    CHECK(back.rows == h.rows);
    CHECK(back.lineality == h.lineality);
}
