#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "mrat/diagram.hpp"

using namespace mrat;

TEST_CASE("raw matchings count Catalan numbers") {
    int expected[] = {1, 2, 5, 14, 42, 132};
    for (int m = 1; m <= 6; ++m) CHECK(raw_matchings(m).size() == expected[m - 1]);
}

TEST_CASE("canonical diagram counts for small m") {
    CHECK(enumerate_diagrams(1).size() == 1);
    CHECK(enumerate_diagrams(2).size() == 1);
    CHECK(enumerate_diagrams(3).size() == 2);
    CHECK(enumerate_diagrams(4).size() == 3);
    CHECK_THROWS_AS(enumerate_diagrams(0), std::invalid_argument);
}

TEST_CASE("faces of small diagrams") {
    ChordDiagram d2({1, 0, 3, 2});
    auto fs = faces(d2);
    std::multiset<int> sizes;
    for (const auto& f : fs) sizes.insert(f.size());
    CHECK(sizes == std::multiset<int>({2, 2, 4}));

    ChordDiagram star({1, 0, 3, 2, 5, 4, 7, 6});
    std::multiset<int> ssizes;
    for (const auto& f : faces(star)) ssizes.insert(f.size());
    CHECK(ssizes == std::multiset<int>({2, 2, 2, 2, 8}));

    ChordDiagram d1({1, 0});
    auto f1 = faces(d1);
    REQUIRE(f1.size() == 2);
    CHECK(f1[0].size() == 2);
    CHECK(f1[1].size() == 2);
}

TEST_CASE("face invariants for all m <= 5") {
    for (int m = 1; m <= 5; ++m)
        for (const auto& d : raw_matchings(m)) {
            auto fs = faces(d);
            REQUIRE(static_cast<int>(fs.size()) == m + 1);
            int total = 0, chord_inc = 0, arc_inc = 0;
            for (const auto& f : fs) {
                total += f.size();
                chord_inc += f.chord_count();
                arc_inc += f.size() - f.chord_count();
            }
            CHECK(total == 4 * m);       // 2 per chord + 1 per arc
            CHECK(chord_inc == 2 * m);   // each chord on two faces
            CHECK(arc_inc == 2 * m);     // each arc on one face
        }
}

TEST_CASE("two opposite proper orientations") {
    for (int m = 1; m <= 5; ++m)
        for (const auto& d : enumerate_diagrams(m)) {
            auto [plus, minus] = orientations(d);
            CHECK(plus.reversed() == minus);
            CHECK(minus.reversed() == plus);
            // every face boundary is a directed cycle by construction; signs
            // must alternate across each chord
            for (int i = 0; i < d.order(); ++i)
                CHECK(plus.chord_forward(i) != plus.chord_forward(d.partner(i)));
            // D+ convention: the face with arc (0,1) is positive
            for (int f = 0; f < plus.face_count(); ++f) {
                bool has_arc0 = false;
                const auto& fc = plus.face_list()[f];
                for (int i = 0; i < fc.size(); ++i) {
                    int u = fc.vertices[i], v = fc.vertices[(i + 1) % fc.size()];
                    int a = (v == (u + 1) % d.order()) ? u : v;
                    if (!fc.via_chord[i] && a == 0) has_arc0 = true;
                }
                if (has_arc0) CHECK(plus.face_positive(f));
            }
        }
}

TEST_CASE("symmetry groups") {
    ChordDiagram d2({1, 0, 3, 2});
    auto g = symmetry_group(d2);
    CHECK(g.size() == 4);
    CHECK(g.orientation_symmetric());
    CHECK(g.oriented_size() == 2);

    // caterpillar-(4,2) diagram at m=4: only the identity and the reflection
    // i -> 3-i, which swaps the two orientations
    ChordDiagram d42({1, 0, 3, 2, 7, 6, 5, 4});
    auto g42 = symmetry_group(d42);
    CHECK(g42.size() == 2);
    CHECK(g42.orientation_symmetric());
    CHECK(g42.oriented_size() == 1);

    ChordDiagram d1({1, 0});
    CHECK(symmetry_group(d1).size() == 4);  // formal dihedral maps on 2 points

    // group axioms: closed under composition, contains identity
    for (int m = 1; m <= 4; ++m)
        for (const auto& d : enumerate_diagrams(m)) {
            auto sg = symmetry_group(d);
            bool has_id = false;
            for (const auto& e : sg.elements)
                if (e.map.is_identity(d.order())) has_id = true;
            CHECK(has_id);
            for (const auto& a : sg.elements)
                for (const auto& b : sg.elements) {
                    // compose as permutations and look for a matching element
                    std::vector<int> comp(d.order());
                    for (int i = 0; i < d.order(); ++i)
                        comp[i] = a.map.apply(b.map.apply(i, d.order()), d.order());
                    bool found = false;
                    for (const auto& c : sg.elements) {
                        bool eq = true;
                        for (int i = 0; i < d.order(); ++i)
                            if (c.map.apply(i, d.order()) != comp[i]) eq = false;
                        if (eq) found = true;
                    }
                    CHECK(found);
                }
        }
}

TEST_CASE("orientation-symmetric diagrams have half their elements preserving D+") {
    for (int m = 2; m <= 5; ++m)
        for (const auto& d : enumerate_diagrams(m)) {
            auto g = symmetry_group(d);
            if (g.orientation_symmetric())
                CHECK(2 * g.oriented_size() == g.size());
            else
                CHECK(g.oriented_size() == g.size());
        }
}

TEST_CASE("diameters") {
    CHECK(diameter(ChordDiagram({1, 0})) == std::make_pair(0, 1));
    CHECK(diameter(ChordDiagram({3, 2, 1, 0, 5, 4})) == std::make_pair(0, 3));
    CHECK_FALSE(diameter(ChordDiagram({1, 0, 3, 2})).has_value());
    // never more than one diameter, exhaustively for m <= 6
    for (int m = 1; m <= 6; ++m)
        for (const auto& d : raw_matchings(m)) CHECK_NOTHROW(diameter(d));
}

TEST_CASE("text format round trip") {
    ChordDiagram d({1, 0, 3, 2});
    CHECK(d.to_text() == "order=4; matching=[1,0,3,2]");
    CHECK(ChordDiagram::from_text(d.to_text()) == d);
    CHECK_THROWS(ChordDiagram::from_text("order=4; matching=[1,0]"));
}

TEST_CASE("canonical form is dihedral-invariant") {
    for (int m = 1; m <= 5; ++m)
        for (const auto& d : raw_matchings(m)) {
            auto c = canonical_form(d);
            for (int s = 0; s < d.order(); ++s)
                for (int refl = 0; refl < 2; ++refl)
                    CHECK(canonical_form(apply_map(d, {s, refl == 1})) == c);
        }
}

TEST_CASE("invalid matchings rejected") {
    CHECK_THROWS_AS(ChordDiagram({0, 1}), std::invalid_argument);          // fixed points
    CHECK_THROWS_AS(ChordDiagram({2, 3, 0, 1}), std::invalid_argument);    // crossing
    CHECK_THROWS_AS(ChordDiagram({1, 0, 3}), std::invalid_argument);       // odd
}
