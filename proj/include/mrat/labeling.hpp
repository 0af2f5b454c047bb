#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mrat/bigint.hpp"
#include "mrat/diagram.hpp"

namespace mrat {

// labels[pos] in 1..2m; proper iff every face's directed boundary labels
// are cyclically increasing (exactly one cyclic descent).
struct LabeledDiagram {
    OrientedDiagram oriented;
    std::vector<int> labels;
};

struct RootOnDiameter : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct CrossCheckError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_proper(const LabeledDiagram& L);

// All proper labelings of the given orientation, optionally with label 1
// fixed at a root position.
std::vector<std::vector<int>> proper_labelings(const OrientedDiagram& d,
                                               std::optional<int> root = std::nullopt);

// #_r(D): proper labelings of D+ with label 1 at root. Throws RootOnDiameter
// unless allow_diameter_root (then the count is half the generic one).
Int count_rooted(const ChordDiagram& d, int root, bool allow_diameter_root = false);

// #(D): nonequivalent proper labelings of {D+, D-}; computed by dedup under
// the symmetry group and cross-checked against pi(D) * #_r(D).
Int count_diagram_total(const ChordDiagram& d);

// A labeled oriented diagram up to the symmetry group: orientation flag
// (0 = D+, 1 = D-) plus the label sequence, minimized over Aut(D).
using LabelClassKey = std::pair<int, std::vector<int>>;

std::vector<LabelClassKey> labeling_classes(const ChordDiagram& d);

// #_n^R: sum of #(D) over all diagrams of order 2n-2 (n = 1, 2 are the
// documented constants). Cross-checked against the planted-tree sum.
Int sharp_real(int n, int jobs = 1);

// The planted-tree pipeline alone: sum of #(T) over planted trees on n
// vertices.
Int sharp_real_planted(int n);

struct Orbit {
    LabelClassKey representative;
    int length = 0;
};

struct DiagramReport {
    ChordDiagram diagram;
    std::string tree_signature;
    Int sharp_r;
    int pi = 0;
    Int total;
    std::vector<Orbit> orbits;
};

struct OrbitDecomposition {
    int n = 0;
    std::vector<DiagramReport> diagrams;

    Int total_labelings() const;
    Int orbit_count() const;
};

// Orbits of the C_{2n-2} label-shift action on labeling classes.
OrbitDecomposition orbit_decomposition(int n, int jobs = 1);

// #~_n^R: number of connected components = number of orbits.
Int components(int n);

}  // namespace mrat
