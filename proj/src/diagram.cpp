#include "mrat/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mrat {

ChordDiagram::ChordDiagram(std::vector<int> matching) : matching_(std::move(matching)) {
    int n = order();
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("order must be even and >= 2");
    for (int i = 0; i < n; ++i) {
        int j = matching_[i];
        if (j < 0 || j >= n || j == i || matching_[j] != i)
            throw std::invalid_argument("matching is not a fixed-point-free involution");
    }
    // noncrossing: no a<b<c<d with a~c and b~d
    for (int a = 0; a < n; ++a) {
        int c = matching_[a];
        if (c <= a) continue;
        for (int b = a + 1; b < c; ++b) {
            int d = matching_[b];
            if (d < a || d > c) throw std::invalid_argument("matching has crossing chords");
        }
    }
}

std::string ChordDiagram::to_text() const {
    std::ostringstream os;
    os << "order=" << order() << "; matching=[";
    for (int i = 0; i < order(); ++i) {
        if (i) os << ",";
        os << matching_[i];
    }
    os << "]";
    return os.str();
}

ChordDiagram ChordDiagram::from_text(const std::string& line) {
    int n = 0;
    if (std::sscanf(line.c_str(), "order=%d", &n) != 1)
        throw std::invalid_argument("bad diagram line: " + line);
    auto lb = line.find('[');
    auto rb = line.find(']');
    if (lb == std::string::npos || rb == std::string::npos || rb < lb)
        throw std::invalid_argument("bad diagram line: " + line);
    std::vector<int> m;
    std::istringstream is(line.substr(lb + 1, rb - lb - 1));
    std::string tok;
    while (std::getline(is, tok, ',')) m.push_back(std::stoi(tok));
    if (static_cast<int>(m.size()) != n)
        throw std::invalid_argument("order does not match matching length: " + line);
    return ChordDiagram(std::move(m));
}

int Face::chord_count() const {
    return static_cast<int>(std::count(via_chord.begin(), via_chord.end(), true));
}

bool DihedralMap::is_identity(int n) const {
    for (int i = 0; i < n; ++i)
        if (apply(i, n) != i) return false;
    return true;
}

int SymmetryGroup::oriented_size() const {
    int k = 0;
    for (const auto& e : elements)
        if (e.preserves_orientation) ++k;
    return k;
}

bool SymmetryGroup::orientation_symmetric() const {
    for (const auto& e : elements)
        if (!e.preserves_orientation) return true;
    return false;
}

namespace {

// Half-edge h = 3*v + slot. Slots at vertex v in counterclockwise order:
//   0: arc to v+1,  1: chord to partner(v),  2: arc to v-1.
int he_twin(const ChordDiagram& d, int h) {
    int n = d.order();
    int v = h / 3, s = h % 3;
    if (s == 0) return 3 * ((v + 1) % n) + 2;
    if (s == 2) return 3 * ((v - 1 + n) % n) + 0;
    return 3 * d.partner(v) + 1;
}

// Next half-edge of the same face (faces traversed ccw, face on the left):
// the clockwise-next slot after the twin.
int he_next(const ChordDiagram& d, int h) {
    int t = he_twin(d, h);
    return (t / 3) * 3 + (t % 3 + 2) % 3;
}

}  // namespace

std::vector<Face> faces(const ChordDiagram& d) {
    int n = d.order();
    std::vector<bool> seen(3 * n, false);
    std::vector<Face> out;
    for (int h0 = 0; h0 < 3 * n; ++h0) {
        if (seen[h0]) continue;
        Face f;
        int h = h0;
        do {
            seen[h] = true;
            f.vertices.push_back(h / 3);
            f.via_chord.push_back(h % 3 == 1);
            h = he_next(d, h);
        } while (h != h0);
        if (f.chord_count() == 0) continue;  // outer face: arcs only
        out.push_back(std::move(f));
    }
    if (static_cast<int>(out.size()) != d.chords() + 1)
        throw std::logic_error("face count is not m+1");
    return out;
}

OrientedDiagram::OrientedDiagram(ChordDiagram d, std::vector<bool> positive)
    : diagram_(std::move(d)), faces_(faces(diagram_)), positive_(std::move(positive)) {
    int n = diagram_.order();
    arc_face_.assign(n, -1);
    arc_base_fwd_.assign(n, false);
    chord_face_.assign(n, -1);
    for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
        const Face& fc = faces_[f];
        for (int i = 0; i < fc.size(); ++i) {
            int u = fc.vertices[i], v = fc.vertices[(i + 1) % fc.size()];
            if (fc.via_chord[i]) {
                // base walk of face f leaves u along the chord toward v
                chord_face_[u] = f;
            } else {
                int a = (v == (u + 1) % n) ? u : v;  // arc index
                arc_face_[a] = f;
                arc_base_fwd_[a] = (a == u);
            }
        }
    }
}

std::vector<int> OrientedDiagram::face_cycle(int f) const {
    std::vector<int> c = faces_[f].vertices;
    if (!positive_[f]) std::reverse(c.begin(), c.end());
    return c;
}

OrientedDiagram OrientedDiagram::reversed() const {
    std::vector<bool> flipped(positive_.size());
    for (size_t i = 0; i < positive_.size(); ++i) flipped[i] = !positive_[i];
    return OrientedDiagram(diagram_, std::move(flipped));
}

bool OrientedDiagram::arc_forward(int i) const {
    return arc_base_fwd_[i] == positive_[arc_face_[i]];
}

bool OrientedDiagram::chord_forward(int i) const {
    // chord_face_[i] is the face whose base walk traverses i -> partner(i)
    return positive_[chord_face_[i]];
}

std::pair<OrientedDiagram, OrientedDiagram> orientations(const ChordDiagram& d) {
    auto fs = faces(d);
    int nf = static_cast<int>(fs.size());
    int n = d.order();

    // face adjacency across chords; chord at min-endpoint u joins two faces
    std::vector<int> chord_face_a(n, -1), chord_face_b(n, -1);
    for (int f = 0; f < nf; ++f)
        for (int i = 0; i < fs[f].size(); ++i)
            if (fs[f].via_chord[i]) {
                int u = std::min(fs[f].vertices[i], fs[f].vertices[(i + 1) % fs[f].size()]);
                (chord_face_a[u] == -1 ? chord_face_a[u] : chord_face_b[u]) = f;
            }

    // 2-color the face tree; root = face containing arc (0,1), made positive
    int root = -1;
    for (int f = 0; f < nf && root < 0; ++f)
        for (int i = 0; i < fs[f].size(); ++i)
            if (!fs[f].via_chord[i]) {
                int u = fs[f].vertices[i], v = fs[f].vertices[(i + 1) % fs[f].size()];
                int a = (v == (u + 1) % n) ? u : v;  // arc index
                if (a == 0) {
                    root = f;
                    break;
                }
            }
    std::vector<int> color(nf, -1);
    color[root] = 1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int u = 0; u < n; ++u) {
            if (chord_face_a[u] == -1) continue;
            int a = chord_face_a[u], b = chord_face_b[u];
            int other = (a == f) ? b : (b == f ? a : -1);
            if (other >= 0 && color[other] == -1) {
                color[other] = 1 - color[f];
                stack.push_back(other);
            }
        }
    }
    std::vector<bool> pos(nf), neg(nf);
    for (int f = 0; f < nf; ++f) {
        pos[f] = color[f] == 1;
        neg[f] = !pos[f];
    }
    return {OrientedDiagram(d, pos), OrientedDiagram(d, neg)};
}

ChordDiagram apply_map(const ChordDiagram& d, const DihedralMap& g) {
    int n = d.order();
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[g.apply(i, n)] = g.apply(d.partner(i), n);
    return ChordDiagram(std::move(m));
}

namespace {

bool preserves_matching(const ChordDiagram& d, const DihedralMap& g) {
    int n = d.order();
    for (int i = 0; i < n; ++i)
        if (g.apply(d.partner(i), n) != d.partner(g.apply(i, n))) return false;
    return true;
}

}  // namespace

SymmetryGroup symmetry_group(const ChordDiagram& d) {
    int n = d.order();
    auto dplus = orientations(d).first;
    // D+ directs the arc (0,1) from `from` to `to`; the image under g is the
    // arc between g(0) and g(1), and g preserves D+ iff directions agree.
    int from = dplus.arc_forward(0) ? 0 : 1;
    int to = 1 - from;
    SymmetryGroup g;
    for (int refl = 0; refl < 2; ++refl)
        for (int s = 0; s < n; ++s) {
            DihedralMap m{s, refl == 1};
            if (!preserves_matching(d, m)) continue;
            int fu = m.apply(from, n), fv = m.apply(to, n);
            int arc = (fv == (fu + 1) % n) ? fu : fv;
            bool img_fwd = (arc == fu);
            bool preserves = dplus.arc_forward(arc) == img_fwd;
            g.elements.push_back({m, preserves});
        }
    return g;
}

std::optional<std::pair<int, int>> diameter(const ChordDiagram& d) {
    int n = d.order();
    if (n == 2) return std::make_pair(0, 1);  // exceptional small case
    auto g = symmetry_group(d);
    std::set<std::pair<int, int>> found;
    for (const auto& e : g.elements) {
        if (e.map.is_identity(n)) continue;
        for (int i = 0; i < n; ++i) {
            int j = d.partner(i);
            if (i < j && e.map.apply(i, n) == i && e.map.apply(j, n) == j)
                found.insert({i, j});
        }
    }
    if (found.size() > 1)
        throw std::logic_error("diagram has more than one diameter: " + d.to_text());
    if (found.empty()) return std::nullopt;
    return *found.begin();
}

ChordDiagram canonical_form(const ChordDiagram& d) {
    int n = d.order();
    std::vector<int> best;
    for (int refl = 0; refl < 2; ++refl)
        for (int s = 0; s < n; ++s) {
            auto m = apply_map(d, DihedralMap{s, refl == 1}).matching();
            if (best.empty() || m < best) best = std::move(m);
        }
    return ChordDiagram(std::move(best));
}

namespace {

// Pair up positions in the pending intervals; a chord's partner must leave
// an even count on each side, which is exactly the noncrossing condition.
void gen_rec(std::vector<int>& partners, std::vector<std::vector<int>> intervals,
             std::vector<std::vector<int>>& out) {
    while (!intervals.empty() && intervals.back().empty()) intervals.pop_back();
    if (intervals.empty()) {
        out.push_back(partners);
        return;
    }
    std::vector<int> pos = std::move(intervals.back());
    intervals.pop_back();
    int a = pos[0];
    for (size_t k = 1; k < pos.size(); k += 2) {
        int b = pos[k];
        partners[a] = b;
        partners[b] = a;
        auto next = intervals;
        next.emplace_back(pos.begin() + 1, pos.begin() + k);
        next.emplace_back(pos.begin() + k + 1, pos.end());
        gen_rec(partners, std::move(next), out);
    }
}

}  // namespace

std::vector<ChordDiagram> raw_matchings(int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    int n = 2 * m;
    std::vector<int> partners(n, -1);
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::vector<std::vector<int>> raw;
    gen_rec(partners, {all}, raw);
    std::vector<ChordDiagram> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.emplace_back(std::move(r));
    return out;
}

std::vector<ChordDiagram> enumerate_diagrams(int m) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    std::set<std::vector<int>> seen;
    for (const auto& d : raw_matchings(m)) seen.insert(canonical_form(d).matching());
    std::vector<ChordDiagram> out;
    for (const auto& v : seen) out.emplace_back(v);
    return out;
}

}  // namespace mrat
