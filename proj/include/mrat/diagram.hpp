#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mrat {

// Noncrossing perfect matching on 2m positions placed counterclockwise on a
// circle; matching[i] is the partner of position i. Together with the 2m
// boundary arcs (i, i+1 mod 2m) this cuts the disk into m+1 faces.
class ChordDiagram {
public:
    explicit ChordDiagram(std::vector<int> matching);

    int order() const { return static_cast<int>(matching_.size()); }  // 2m
    int chords() const { return order() / 2; }                        // m
    int partner(int i) const { return matching_[i]; }
    const std::vector<int>& matching() const { return matching_; }

    bool operator==(const ChordDiagram&) const = default;
    bool operator<(const ChordDiagram& o) const { return matching_ < o.matching_; }

    // Text format: order=2m; matching=[p0,p1,...]
    std::string to_text() const;
    static ChordDiagram from_text(const std::string& line);

private:
    std::vector<int> matching_;
};

// One face of the disk. vertices is the counterclockwise boundary walk
// (face on the left); the edge from vertices[i] to vertices[i+1] is a chord
// iff via_chord[i], otherwise a boundary arc.
struct Face {
    std::vector<int> vertices;
    std::vector<bool> via_chord;

    int size() const { return static_cast<int>(vertices.size()); }
    int chord_count() const;

    bool operator==(const Face&) const = default;
};

// Map i -> (shift + i) or (shift - i) mod 2m.
struct DihedralMap {
    int shift = 0;
    bool reflect = false;

    int apply(int i, int n) const {
        int j = reflect ? shift - i : shift + i;
        return ((j % n) + n) % n;
    }
    bool is_identity(int n) const;
    bool operator==(const DihedralMap&) const = default;
};

struct SymmetryElement {
    DihedralMap map;
    bool preserves_orientation = true;  // sends D+ to D+ (and D- to D-)
};

struct SymmetryGroup {
    std::vector<SymmetryElement> elements;

    int size() const { return static_cast<int>(elements.size()); }
    int oriented_size() const;          // |Aut(D+)|
    bool orientation_symmetric() const; // some element swaps D+ and D-
};

// A proper orientation, stored as one sign bit per face. Positive faces are
// traversed counterclockwise; edge directions are derived.
class OrientedDiagram {
public:
    OrientedDiagram(ChordDiagram d, std::vector<bool> positive);

    const ChordDiagram& diagram() const { return diagram_; }
    const std::vector<Face>& face_list() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    bool face_positive(int f) const { return positive_[f]; }

    // Directed vertex cycle along the boundary of face f.
    std::vector<int> face_cycle(int f) const;

    OrientedDiagram reversed() const;
    // Arc between i and i+1: directed i -> i+1 ?
    bool arc_forward(int i) const;
    // Chord at position i: directed i -> partner(i) ?
    bool chord_forward(int i) const;

    bool operator==(const OrientedDiagram&) const = default;

private:
    ChordDiagram diagram_;
    std::vector<Face> faces_;
    std::vector<bool> positive_;
    std::vector<int> arc_face_;       // interior face containing arc i
    std::vector<bool> arc_base_fwd_;  // base walk traverses arc i as i -> i+1
    std::vector<int> chord_face_;  // face whose base walk goes i -> partner(i)
};

// All noncrossing perfect matchings on 2m points (Catalan(m) of them).
std::vector<ChordDiagram> raw_matchings(int m);

// One canonical representative per equivalence class under the dihedral
// group of order 4m.
std::vector<ChordDiagram> enumerate_diagrams(int m);

ChordDiagram canonical_form(const ChordDiagram& d);
ChordDiagram apply_map(const ChordDiagram& d, const DihedralMap& g);

// The m+1 interior faces.
std::vector<Face> faces(const ChordDiagram& d);

// The two proper orientations; first is D+, the one whose face containing
// the boundary arc (0,1) is positive.
std::pair<OrientedDiagram, OrientedDiagram> orientations(const ChordDiagram& d);

SymmetryGroup symmetry_group(const ChordDiagram& d);

// The unique chord fixed pointwise by a nontrivial symmetry, if any.
std::optional<std::pair<int, int>> diameter(const ChordDiagram& d);

}  // namespace mrat
