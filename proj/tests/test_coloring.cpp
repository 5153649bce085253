#include "doctest.h"

#include <algorithm>
#include <map>

#include "pcf/coloring.hpp"
#include "pcf/errors.hpp"
#include "pcf/graph.hpp"

using namespace pcf;

TEST_CASE("list assignment validation and edits") {
    ListAssignment L({{2, 0, 1}, {5}});
    CHECK(L.list(0) == std::vector<Color>{0, 1, 2}); // normalized ascending
    CHECK(L.contains(1, 5));
    CHECK_FALSE(L.contains(0, 5));
    CHECK(ListAssignment(std::vector<std::vector<Color>>{{0, 0}}).list(0) ==
          std::vector<Color>{0}); // duplicates coalesce
    CHECK_THROWS_AS(ListAssignment(std::vector<std::vector<Color>>{{}}), std::invalid_argument);      // empty list
    CHECK_THROWS_AS(ListAssignment(std::vector<std::vector<Color>>{{-1}}), std::invalid_argument);    // negative color

    L.erase_color(0, 1);
    CHECK(L.list(0) == std::vector<Color>{0, 2});
    CHECK_THROWS_AS(L.erase_color(1, 5), std::invalid_argument); // would become empty
    L.set_list(1, {7, 3});
    CHECK(L.list(1) == std::vector<Color>{3, 7});
}

TEST_CASE("partial coloring") {
    PartialColoring phi(3);
    CHECK_FALSE(phi.complete());
    CHECK_FALSE(phi.has(0));
    CHECK_THROWS_AS(phi.color(0), std::logic_error);
    phi.set(0, 4);
    CHECK(phi.color(0) == 4);
    CHECK(phi.assigned_count() == 1);
    phi.clear(0);
    CHECK_FALSE(phi.has(0));
    CHECK_THROWS_AS(phi.set(0, -2), std::invalid_argument);
}

TEST_CASE("unique_neighbor_colors") {
    // star K_{1,3}: leaves colored 1,1,2 -> center sees {2}
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    PartialColoring phi(4);
    phi.set(1, 1);
    phi.set(2, 1);
    phi.set(3, 2);
    CHECK(unique_neighbor_colors(star, phi, 0) == std::vector<Color>{2});

    // all neighbors uncolored -> empty
    PartialColoring empty(4);
    CHECK(unique_neighbor_colors(star, empty, 0).empty());

    // C6 colored 1,2,3,1,2,3: vertex 0 sees neighbors 2 and 3, each once
    const Graph c6 = make_cycle(6);
    PartialColoring rot(6);
    for (int v = 0; v < 6; ++v) rot.set(v, 1 + v % 3);
    CHECK(unique_neighbor_colors(c6, rot, 0) == std::vector<Color>{2, 3});
}

TEST_CASE("verify_pcf accepts and rejects correctly") {
    const Graph c5 = make_cycle(5);
    const ListAssignment L5(std::vector<std::vector<Color>>(5, {0, 1, 2, 3, 4}));
    PartialColoring rainbow(5);
    for (int v = 0; v < 5; ++v) rainbow.set(v, v);
    CHECK_FALSE(verify_pcf(c5, L5, rainbow).has_value()); // five distinct colors work

    const Graph c6 = make_cycle(6);
    const ListAssignment L6(std::vector<std::vector<Color>>(6, {1, 2}));
    PartialColoring alt(6);
    for (int v = 0; v < 6; ++v) alt.set(v, 1 + v % 2);
    const auto bad = verify_pcf(c6, L6, alt);
    REQUIRE(bad.has_value());
    CHECK(bad->kind == Violation::Kind::EmptyUniqueSet); // both neighbors share a color
    CHECK(bad->u == 0);                                  // first vertex in scan order

    const Graph k2 = make_complete(2);
    const ListAssignment L2(std::vector<std::vector<Color>>(2, {1, 2}));
    PartialColoring same(2);
    same.set(0, 1);
    same.set(1, 1);
    const auto imp = verify_pcf(k2, L2, same);
    REQUIRE(imp.has_value());
    CHECK(imp->kind == Violation::Kind::ImproperEdge);

    PartialColoring off(2);
    off.set(0, 9);
    off.set(1, 2);
    CHECK(verify_pcf(k2, L2, off)->kind == Violation::Kind::OffList);

    PartialColoring part(2);
    part.set(0, 1);
    CHECK(verify_pcf(k2, L2, part)->kind == Violation::Kind::IncompleteVertex);

    // isolated vertices only need an on-list color
    Graph lone(1);
    PartialColoring one(1);
    one.set(0, 0);
    CHECK_FALSE(verify_pcf(lone, ListAssignment(std::vector<std::vector<Color>>{{0}}), one).has_value());
}

TEST_CASE("verify_pcf is invariant under color permutation") {
    const Graph g = random_bounded_degree(8, 3, 5);
    const ListAssignment L = degree_plus_k_lists(g, 2, 6, 11);
    // find some valid coloring by scanning products (small lists)
    PartialColoring phi(8);
    std::vector<int> idx(8, 0);
    bool found = false;
    while (!found) {
        for (int v = 0; v < 8; ++v) phi.set(v, L.list(v)[idx[v]]);
        found = !verify_pcf(g, L, phi);
        if (found) break;
        int pos = 7;
        while (pos >= 0 && ++idx[pos] == L.list_size(pos)) {
            idx[pos] = 0;
            --pos;
        }
        REQUIRE(pos >= 0); // degree+2 instances are satisfiable
    }
    // permute colors simultaneously in phi and L: validity is preserved
    const auto perm = [](Color c) { return (c * 7 + 3) % 23; };
    std::vector<std::vector<Color>> pl;
    for (int v = 0; v < 8; ++v) {
        std::vector<Color> lst;
        for (Color c : L.list(v)) lst.push_back(perm(c));
        pl.push_back(lst);
    }
    PartialColoring pphi(8);
    for (int v = 0; v < 8; ++v) pphi.set(v, perm(phi.color(v)));
    CHECK_FALSE(verify_pcf(g, ListAssignment(pl), pphi).has_value());
}

TEST_CASE("degree_plus_k_lists") {
    const Graph c5 = make_cycle(5);
    const ListAssignment a = degree_plus_k_lists(c5, 2, 4, 1);
    for (int v = 0; v < 5; ++v) CHECK(a.list(v) == std::vector<Color>{0, 1, 2, 3}); // 4 of 4

    CHECK(degree_plus_k_lists(c5, 2, 12, 9) == degree_plus_k_lists(c5, 2, 12, 9)); // same seed
    CHECK(degree_plus_k_lists(c5, 2, 12, 9) != degree_plus_k_lists(c5, 2, 12, 10));

    const Graph g = random_bounded_degree(9, 4, 2);
    const ListAssignment b = degree_plus_k_lists(g, 3, 7, 0);
    for (int v = 0; v < 9; ++v) {
        CHECK(b.list_size(v) == g.degree(v) + 3);
        if (g.degree(v) == 4) CHECK(b.list(v) == std::vector<Color>{0, 1, 2, 3, 4, 5, 6});
        CHECK(b.list(v).back() < 7);
    }
    CHECK_THROWS_AS(degree_plus_k_lists(c5, 2, 3, 0), std::invalid_argument); // universe too small
}

TEST_CASE("lists and colorings parse and serialize") {
    const ListAssignment L = parse_lists("# two vertices\n0: 2 0\n1: 5\n", 2);
    CHECK(L.list(0) == std::vector<Color>{0, 2});
    CHECK(parse_lists(serialize_lists(L), 2) == L);
    CHECK_THROWS_AS(parse_lists("0: 1\n", 2), ParseError);        // missing vertex
    CHECK_THROWS_AS(parse_lists("0: 1\n2: 1\n", 2), ParseError);  // id out of range
    CHECK_THROWS_AS(parse_lists("0: 1\n0: 2\n", 1), ParseError);  // duplicate vertex

    PartialColoring phi(3);
    phi.set(0, 4);
    phi.set(2, 1);
    const PartialColoring back = parse_coloring(serialize_coloring(phi), 3);
    CHECK(back == phi);
    CHECK_THROWS_AS(parse_coloring("0 = x\n", 1), ParseError);
    CHECK_THROWS_AS(parse_coloring("5 = 1\n", 3), ParseError);
}
