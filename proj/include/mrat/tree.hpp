#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mrat/diagram.hpp"

namespace mrat {

// Plane tree: at each vertex the incident edges carry a counterclockwise
// cyclic order. Equivalence is cyclic-order-preserving isomorphism; the
// mirror tree reverses every cyclic order.
class PlaneTree {
public:
    explicit PlaneTree(std::vector<std::vector<int>> nbrs);

    int vertex_count() const { return static_cast<int>(nbrs_.size()); }
    int edge_count() const { return vertex_count() - 1; }
    int degree(int v) const { return static_cast<int>(nbrs_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return nbrs_[v]; }

    PlaneTree mirrored() const;

    // Balanced-parenthesis code of the planting at edge-end (v, k): the tree
    // rooted at v with the k-th incident edge first.
    std::string planted_code(int v, int k) const;

    // Codes of all 2e plantings, deduplicated.
    std::set<std::string> distinct_plantings() const;

    int aut_order() const;          // |Aut(T)|, cyclic-order preserving
    bool mirror_symmetric() const;  // T isomorphic to its mirror
    // Minimal planting code over T and its mirror; class invariant under
    // the equivalence used for diagrams.
    std::string canonical_code() const;

    static PlaneTree from_code(const std::string& code);

private:
    std::vector<std::vector<int>> nbrs_;
};

// Caterpillar type (delta_1,...,delta_k): delta_i = 2(d_i - 1) over the
// internal path vertices; empty for the single-edge tree.
struct CaterpillarType {
    std::vector<int> delta;

    int edge_count() const;           // e = 1 + sum(delta)/2
    std::vector<int> degrees() const; // d_i = delta_i/2 + 1
};

// All planted plane trees on n vertices, as codes (Catalan(n-1) of them).
std::vector<std::string> enumerate_planted(int n);

// Face-adjacency tree of a diagram; tree vertex f's neighbors appear in the
// order their chords occur along the face boundary walk.
PlaneTree associated_tree(const ChordDiagram& d);

// Inverse construction: boundary walk of the planted tree gives the circle
// positions, each edge visited twice gives a chord.
ChordDiagram diagram_from_planted(const std::string& code);

// pi(D): distinct plantings of T(D) and its mirror, computed both by brute
// enumeration and by the 2e/|Aut| formula; throws if they disagree.
int plantings_count(const ChordDiagram& d);

std::optional<CaterpillarType> caterpillar_type(const PlaneTree& t);

}  // namespace mrat
