#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "mrat/tree.hpp"

using namespace mrat;

namespace {

// path on n vertices as a plane tree
PlaneTree path_tree(int n) {
    std::vector<std::vector<int>> nbrs(n);
    for (int v = 0; v + 1 < n; ++v) {
        nbrs[v].push_back(v + 1);
        nbrs[v + 1].push_back(v);
    }
    return PlaneTree(std::move(nbrs));
}

PlaneTree star_tree(int n) {
    std::vector<std::vector<int>> nbrs(n);
    for (int v = 1; v < n; ++v) {
        nbrs[0].push_back(v);
        nbrs[v].push_back(0);
    }
    return PlaneTree(std::move(nbrs));
}

}  // namespace

TEST_CASE("associated trees of the m=2 and m=4 diagrams") {
    // single m=2 diagram: path on 3 vertices
    auto t2 = associated_tree(ChordDiagram({1, 0, 3, 2}));
    CHECK(t2.canonical_code() == path_tree(3).canonical_code());

    // m=4 star diagram: star on 5 vertices
    auto ts = associated_tree(ChordDiagram({1, 0, 3, 2, 5, 4, 7, 6}));
    CHECK(ts.canonical_code() == star_tree(5).canonical_code());

    // m=4 three-square-faces diagram: path on 5 vertices
    auto tp = associated_tree(ChordDiagram({1, 0, 7, 6, 5, 4, 3, 2}));
    CHECK(tp.canonical_code() == path_tree(5).canonical_code());
}

TEST_CASE("diagram classes biject with plane tree classes for m <= 5") {
    for (int m = 1; m <= 5; ++m) {
        std::set<std::string> codes;
        for (const auto& d : enumerate_diagrams(m)) {
            auto code = associated_tree(d).canonical_code();
            CHECK(codes.insert(code).second);  // injective
            // round trip: rebuild a diagram from the tree, compare classes
            auto back = canonical_form(diagram_from_planted(code));
            CHECK(back == canonical_form(d));
        }
    }
}

TEST_CASE("planted tree enumeration") {
    CHECK(enumerate_planted(2).size() == 1);
    CHECK(enumerate_planted(3).size() == 2);
    CHECK(enumerate_planted(5).size() == 14);  // Catalan(4)
    CHECK_THROWS_AS(enumerate_planted(1), std::invalid_argument);

    // 14 plantings across exactly 3 underlying trees on 5 vertices
    std::map<std::string, int> by_tree;
    for (const auto& code : enumerate_planted(5))
        ++by_tree[PlaneTree::from_code(code).canonical_code()];
    CHECK(by_tree.size() == 3);
}

TEST_CASE("plantings counts") {
    // the three m=4 diagrams: path -> 4, caterpillar-(4,2) -> 8, star -> 2
    CHECK(plantings_count(ChordDiagram({1, 0, 7, 6, 5, 4, 3, 2})) == 4);
    CHECK(plantings_count(ChordDiagram({1, 0, 3, 2, 7, 6, 5, 4})) == 8);
    CHECK(plantings_count(ChordDiagram({1, 0, 3, 2, 5, 4, 7, 6})) == 2);
    // m=1: single edge tree, one planting class
    CHECK(plantings_count(ChordDiagram({1, 0})) == 1);
    // formula and brute force agree across all diagrams with m <= 5
    for (int m = 1; m <= 5; ++m)
        for (const auto& d : enumerate_diagrams(m)) CHECK_NOTHROW(plantings_count(d));
}

TEST_CASE("caterpillar recognition") {
    auto p5 = caterpillar_type(path_tree(5));
    REQUIRE(p5.has_value());
    CHECK(p5->delta == std::vector<int>({2, 2, 2}));
    CHECK(p5->edge_count() == 4);

    // chair: path a-b-c-d with a leaf on b
    std::vector<std::vector<int>> chair{{1}, {0, 2, 4}, {1, 3}, {2}, {1}};
    auto ct = caterpillar_type(PlaneTree(chair));
    REQUIRE(ct.has_value());
    CHECK(ct->delta == std::vector<int>({2, 4}));  // lex-min spine direction
    CHECK(ct->edge_count() == 4);
    CHECK(ct->degrees() == std::vector<int>({2, 3}));

    // star on 5 vertices: single internal vertex, delta = (2(d-1)) = (6)
    auto st = caterpillar_type(star_tree(5));
    REQUIRE(st.has_value());
    CHECK(st->delta == std::vector<int>({6}));
    CHECK(st->edge_count() == 4);

    // single edge
    auto se = caterpillar_type(path_tree(2));
    REQUIRE(se.has_value());
    CHECK(se->delta.empty());
    CHECK(se->edge_count() == 1);

    // spider on 7 vertices: smallest non-caterpillar
    std::vector<std::vector<int>> spider{{1, 3, 5}, {0, 2}, {1}, {0, 4}, {3}, {0, 6}, {5}};
    CHECK_FALSE(caterpillar_type(PlaneTree(spider)).has_value());
}

TEST_CASE("planted code round trip and aut orders") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& code : enumerate_planted(n)) {
            auto t = PlaneTree::from_code(code);
            CHECK(t.vertex_count() == n);
            CHECK(t.distinct_plantings().count(code) == 1);
            CHECK(2 * t.edge_count() % t.aut_order() == 0);
        }
    // path on 3 vertices: mirror-symmetric, |Aut| = 2 (rotation through center)
    CHECK(path_tree(3).mirror_symmetric());
}
