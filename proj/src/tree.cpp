#include "mrat/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace mrat {

PlaneTree::PlaneTree(std::vector<std::vector<int>> nbrs) : nbrs_(std::move(nbrs)) {
    int n = vertex_count();
    if (n < 1) throw std::invalid_argument("empty tree");
    int deg_sum = 0;
    for (const auto& a : nbrs_) deg_sum += static_cast<int>(a.size());
    if (deg_sum != 2 * (n - 1)) throw std::invalid_argument("not a tree: wrong edge count");
    // connectivity
    std::vector<bool> seen(n, false);
    std::vector<int> stack{0};
    seen[0] = true;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : nbrs_[v])
            if (!seen[w]) {
                seen[w] = true;
                ++cnt;
                stack.push_back(w);
            }
    }
    if (cnt != n) throw std::invalid_argument("not a tree: disconnected");
}

PlaneTree PlaneTree::mirrored() const {
    auto a = nbrs_;
    for (auto& v : a) std::reverse(v.begin(), v.end());
    return PlaneTree(std::move(a));
}

namespace {

void encode_subtree(const std::vector<std::vector<int>>& nbrs, int v, int parent,
                    std::string& out) {
    const auto& a = nbrs[v];
    int deg = static_cast<int>(a.size());
    int start = 0;
    if (parent >= 0) {
        auto it = std::find(a.begin(), a.end(), parent);
        start = static_cast<int>(it - a.begin()) + 1;
    }
    int children = (parent >= 0) ? deg - 1 : deg;
    for (int t = 0; t < children; ++t) {
        int w = a[(start + t) % deg];
        out.push_back('(');
        encode_subtree(nbrs, w, v, out);
        out.push_back(')');
    }
}

}  // namespace

std::string PlaneTree::planted_code(int v, int k) const {
    const auto& a = nbrs_[v];
    int deg = static_cast<int>(a.size());
    std::string out;
    for (int t = 0; t < deg; ++t) {
        int w = a[(k + t) % deg];
        out.push_back('(');
        encode_subtree(nbrs_, w, v, out);
        out.push_back(')');
    }
    return out;
}

std::set<std::string> PlaneTree::distinct_plantings() const {
    std::set<std::string> out;
    for (int v = 0; v < vertex_count(); ++v)
        for (int k = 0; k < degree(v); ++k) out.insert(planted_code(v, k));
    return out;
}

int PlaneTree::aut_order() const {
    int plantings = static_cast<int>(distinct_plantings().size());
    int total = 2 * edge_count();
    if (total % plantings != 0) throw std::logic_error("planting orbit sizes are uneven");
    return total / plantings;
}

bool PlaneTree::mirror_symmetric() const {
    return distinct_plantings() == mirrored().distinct_plantings();
}

std::string PlaneTree::canonical_code() const {
    auto a = distinct_plantings();
    auto b = mirrored().distinct_plantings();
    return std::min(*a.begin(), *b.begin());
}

PlaneTree PlaneTree::from_code(const std::string& code) {
    std::vector<std::vector<int>> nbrs(1);
    std::vector<int> stack{0};
    for (char c : code) {
        if (c == '(') {
            int w = static_cast<int>(nbrs.size());
            nbrs.emplace_back();
            int v = stack.back();
            nbrs[v].push_back(w);
            nbrs[w].push_back(v);  // parent first in the child's cyclic order
            stack.push_back(w);
        } else if (c == ')') {
            if (stack.size() < 2) throw std::invalid_argument("unbalanced code");
            stack.pop_back();
        } else {
            throw std::invalid_argument("bad character in code");
        }
    }
    if (stack.size() != 1) throw std::invalid_argument("unbalanced code");
    return PlaneTree(std::move(nbrs));
}

int CaterpillarType::edge_count() const {
    return 1 + std::accumulate(delta.begin(), delta.end(), 0) / 2;
}

std::vector<int> CaterpillarType::degrees() const {
    std::vector<int> d;
    d.reserve(delta.size());
    for (int x : delta) d.push_back(x / 2 + 1);
    return d;
}

std::vector<std::string> enumerate_planted(int n) {
    if (n < 2) throw std::invalid_argument("planted trees need n >= 2");
    // all balanced parenthesis strings with n-1 pairs
    std::vector<std::string> out;
    std::string cur;
    auto rec = [&](auto&& self, int open, int closed) -> void {
        int pairs = n - 1;
        if (open == pairs && closed == pairs) {
            out.push_back(cur);
            return;
        }
        if (open < pairs) {
            cur.push_back('(');
            self(self, open + 1, closed);
            cur.pop_back();
        }
        if (closed < open) {
            cur.push_back(')');
            self(self, open, closed + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

PlaneTree associated_tree(const ChordDiagram& d) {
    auto fs = faces(d);
    int nf = static_cast<int>(fs.size());
    // chord at min endpoint u -> the two faces it bounds
    int n = d.order();
    std::vector<std::pair<int, int>> sides(n, {-1, -1});
    for (int f = 0; f < nf; ++f)
        for (int i = 0; i < fs[f].size(); ++i)
            if (fs[f].via_chord[i]) {
                int u = std::min(fs[f].vertices[i], fs[f].vertices[(i + 1) % fs[f].size()]);
                (sides[u].first == -1 ? sides[u].first : sides[u].second) = f;
            }
    std::vector<std::vector<int>> nbrs(nf);
    for (int f = 0; f < nf; ++f)
        for (int i = 0; i < fs[f].size(); ++i)
            if (fs[f].via_chord[i]) {
                int u = std::min(fs[f].vertices[i], fs[f].vertices[(i + 1) % fs[f].size()]);
                nbrs[f].push_back(sides[u].first == f ? sides[u].second : sides[u].first);
            }
    return PlaneTree(std::move(nbrs));
}

ChordDiagram diagram_from_planted(const std::string& code) {
    PlaneTree t = PlaneTree::from_code(code);
    int e = t.edge_count();
    if (e < 1) throw std::invalid_argument("tree has no edges");
    // boundary walk starting at the root's first edge-end
    std::vector<int> visit_edge;  // undirected edge id per visit
    std::map<std::pair<int, int>, int> edge_id;
    auto id_of = [&](int a, int b) {
        auto key = std::minmax(a, b);
        auto it = edge_id.find({key.first, key.second});
        if (it != edge_id.end()) return it->second;
        int id = static_cast<int>(edge_id.size());
        edge_id[{key.first, key.second}] = id;
        return id;
    };
    int v = 0, k = 0;
    for (int step = 0; step < 2 * e; ++step) {
        int w = t.neighbors(v)[k];
        visit_edge.push_back(id_of(v, w));
        // continue with the edge after (w, v) in w's cyclic order
        const auto& a = t.neighbors(w);
        auto it = std::find(a.begin(), a.end(), v);
        k = static_cast<int>((it - a.begin() + 1) % a.size());
        v = w;
    }
    std::vector<int> matching(2 * e, -1);
    std::map<int, int> first_visit;
    for (int p = 0; p < 2 * e; ++p) {
        auto it = first_visit.find(visit_edge[p]);
        if (it == first_visit.end()) {
            first_visit[visit_edge[p]] = p;
        } else {
            matching[p] = it->second;
            matching[it->second] = p;
        }
    }
    return ChordDiagram(std::move(matching));
}

int plantings_count(const ChordDiagram& d) {
    PlaneTree t = associated_tree(d);
    auto a = t.distinct_plantings();
    auto b = t.mirrored().distinct_plantings();
    std::set<std::string> both = a;
    both.insert(b.begin(), b.end());
    int brute = static_cast<int>(both.size());

    int e = t.edge_count();
    int by_formula = 2 * e / t.aut_order();
    if (!t.mirror_symmetric()) by_formula *= 2;
    if (brute != by_formula)
        throw std::logic_error("plantings: formula and enumeration disagree for " + d.to_text());
    return brute;
}

std::optional<CaterpillarType> caterpillar_type(const PlaneTree& t) {
    int n = t.vertex_count();
    if (n == 2) return CaterpillarType{{}};  // single edge, empty spine
    std::vector<int> internal;
    for (int v = 0; v < n; ++v)
        if (t.degree(v) >= 2) internal.push_back(v);
    // caterpillar iff the internal vertices form a path
    std::vector<int> ideg(n, 0);
    for (int v : internal)
        for (int w : t.neighbors(v))
            if (t.degree(w) >= 2) ++ideg[v];
    std::vector<int> ends;
    for (int v : internal) {
        if (ideg[v] > 2) return std::nullopt;
        if (ideg[v] <= 1) ends.push_back(v);
    }
    if (internal.size() == 1) {
        return CaterpillarType{{2 * (t.degree(internal[0]) - 1)}};
    }
    if (ends.size() != 2) return std::nullopt;
    // walk the spine from one end
    auto walk = [&](int start) {
        std::vector<int> delta;
        int prev = -1, v = start;
        while (true) {
            delta.push_back(2 * (t.degree(v) - 1));
            int next = -1;
            for (int w : t.neighbors(v))
                if (w != prev && t.degree(w) >= 2) next = w;
            if (next == -1) break;
            prev = v;
            v = next;
        }
        return delta;
    };
    auto d1 = walk(ends[0]);
    auto d2 = walk(ends[1]);
    if (d1.size() != internal.size()) return std::nullopt;  // spine not a path
    return CaterpillarType{std::min(d1, d2)};
}

}  // namespace mrat
