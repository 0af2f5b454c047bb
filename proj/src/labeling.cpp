#include "mrat/labeling.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <set>
#include <thread>

#include "mrat/tree.hpp"

namespace mrat {

namespace {

int cyclic_descents(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size());
    int k = 0;
    for (int i = 0; i < n; ++i)
        if (seq[i] > seq[(i + 1) % n]) ++k;
    return k;
}

}  // namespace

bool is_proper(const LabeledDiagram& L) {
    const auto& d = L.oriented.diagram();
    int n = d.order();
    std::vector<bool> used(n + 1, false);
    for (int v : L.labels) {
        if (v < 1 || v > n || used[v]) return false;
        used[v] = true;
    }
    for (int f = 0; f < L.oriented.face_count(); ++f) {
        auto cyc = L.oriented.face_cycle(f);
        std::vector<int> seq;
        seq.reserve(cyc.size());
        for (int v : cyc) seq.push_back(L.labels[v]);
        if (cyclic_descents(seq) != 1) return false;
    }
    return true;
}

std::vector<std::vector<int>> proper_labelings(const OrientedDiagram& d,
                                               std::optional<int> root) {
    int n = d.diagram().order();
    int nf = d.face_count();
    std::vector<std::vector<int>> cycles(nf);
    for (int f = 0; f < nf; ++f) cycles[f] = d.face_cycle(f);

    std::vector<std::vector<int>> faces_of_pos(n);
    for (int f = 0; f < nf; ++f)
        for (int v : cycles[f]) faces_of_pos[v].push_back(f);

    // fill positions face by face so the cyclic-subsequence prune bites early
    std::vector<int> order;
    std::vector<bool> queued(n, false);
    for (int f = 0; f < nf; ++f)
        for (int v : cycles[f])
            if (!queued[v]) {
                queued[v] = true;
                order.push_back(v);
            }
    if (root) {
        auto it = std::find(order.begin(), order.end(), *root);
        std::rotate(order.begin(), it, it + 1);  // assign the root first
    }

    std::vector<int> labels(n, 0);
    std::vector<bool> used(n + 1, false);
    std::vector<std::vector<int>> out;

    // a subsequence of a cyclically increasing cycle is cyclically
    // increasing, so any partial face may have at most one cyclic descent
    auto face_ok = [&](int f) {
        std::vector<int> seq;
        for (int v : cycles[f])
            if (labels[v]) seq.push_back(labels[v]);
        if (seq.size() < 3) return true;
        return cyclic_descents(seq) <= 1;
    };

    auto rec = [&](auto&& self, size_t idx) -> void {
        if (idx == order.size()) {
            out.push_back(labels);
            return;
        }
        int p = order[idx];
        int lo = 1, hi = n;
        if (root && p == *root) lo = hi = 1;
        for (int v = lo; v <= hi; ++v) {
            if (used[v]) continue;
            labels[p] = v;
            used[v] = true;
            bool ok = true;
            for (int f : faces_of_pos[p])
                if (!face_ok(f)) {
                    ok = false;
                    break;
                }
            if (ok) self(self, idx + 1);
            labels[p] = 0;
            used[v] = false;
        }
    };
    rec(rec, 0);
    return out;
}

Int count_rooted(const ChordDiagram& d, int root, bool allow_diameter_root) {
    auto dia = diameter(d);
    bool on_diameter = dia && (dia->first == root || dia->second == root);
    if (on_diameter && !allow_diameter_root)
        throw RootOnDiameter("root " + std::to_string(root) + " is a diameter endpoint of " +
                             d.to_text());
    auto dplus = orientations(d).first;
    Int raw = static_cast<Int>(proper_labelings(dplus, root).size());
    if (on_diameter) {
        // diameter endpoints report the labelings modulo the reflection
        // through the diameter, which pairs them up
        if (raw % 2 != 0)
            throw CrossCheckError("odd rooted count at a diameter endpoint of " + d.to_text());
        return raw / 2;
    }
    return raw;
}

namespace {

LabelClassKey canonical_key(const ChordDiagram& d, const SymmetryGroup& g, int orient,
                            const std::vector<int>& labels) {
    int n = d.order();
    LabelClassKey best{2, {}};
    for (const auto& e : g.elements) {
        int o = e.preserves_orientation ? orient : 1 - orient;
        std::vector<int> mapped(n);
        for (int i = 0; i < n; ++i) mapped[e.map.apply(i, n)] = labels[i];
        LabelClassKey key{o, std::move(mapped)};
        if (key < best) best = std::move(key);
    }
    return best;
}

std::vector<int> pick_root(const ChordDiagram& d) {
    auto dia = diameter(d);
    std::vector<int> roots;
    for (int i = 0; i < d.order(); ++i)
        if (!dia || (dia->first != i && dia->second != i)) roots.push_back(i);
    return roots;
}

}  // namespace

std::vector<LabelClassKey> labeling_classes(const ChordDiagram& d) {
    auto [dplus, dminus] = orientations(d);
    auto g = symmetry_group(d);
    std::set<LabelClassKey> keys;
    for (const auto& L : proper_labelings(dplus)) keys.insert(canonical_key(d, g, 0, L));
    for (const auto& L : proper_labelings(dminus)) keys.insert(canonical_key(d, g, 1, L));
    return {keys.begin(), keys.end()};
}

Int count_diagram_total(const ChordDiagram& d) {
    if (d.order() < 4) throw std::invalid_argument("count_diagram_total needs m >= 2");
    Int direct = static_cast<Int>(labeling_classes(d).size());
    Int via_formula = Int(plantings_count(d)) * count_rooted(d, pick_root(d).front());
    if (direct != via_formula)
        throw CrossCheckError("labelings of " + d.to_text() + ": dedup gives " +
                              direct.str() + " but pi(D)*#_r(D) gives " + via_formula.str());
    return direct;
}

namespace {

void parallel_over(int count, int jobs, const std::function<void(int)>& work) {
    jobs = std::max(1, std::min(jobs, count));
    if (jobs == 1) {
        for (int i = 0; i < count; ++i) work(i);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            for (int i = next++; i < count; i = next++) work(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace

Int sharp_real(int n, int jobs) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n <= 2) return 1;  // exceptional constants
    auto ds = enumerate_diagrams(n - 1);
    std::vector<Int> per(ds.size());
    parallel_over(static_cast<int>(ds.size()), jobs,
                  [&](int i) { per[i] = count_diagram_total(ds[i]); });
    Int sum = 0;
    for (const auto& v : per) sum += v;
    return sum;
}

Int sharp_real_planted(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n <= 2) return 1;
    std::map<std::vector<int>, Int> cache;  // canonical matching -> #_r
    Int sum = 0;
    for (const auto& code : enumerate_planted(n)) {
        auto d = canonical_form(diagram_from_planted(code));
        auto it = cache.find(d.matching());
        if (it == cache.end())
            it = cache.emplace(d.matching(), count_rooted(d, pick_root(d).front())).first;
        sum += it->second;
    }
    return sum;
}

Int OrbitDecomposition::total_labelings() const {
    Int s = 0;
    for (const auto& d : diagrams)
        for (const auto& o : d.orbits) s += o.length;
    return s;
}

Int OrbitDecomposition::orbit_count() const {
    Int s = 0;
    for (const auto& d : diagrams) s += static_cast<Int>(d.orbits.size());
    return s;
}

OrbitDecomposition orbit_decomposition(int n, int jobs) {
    if (n < 3) throw std::invalid_argument("orbit decomposition needs n >= 3");
    auto ds = enumerate_diagrams(n - 1);
    OrbitDecomposition out;
    out.n = n;
    std::vector<std::optional<DiagramReport>> slots(ds.size());
    parallel_over(static_cast<int>(ds.size()), jobs, [&](int di) {
        const auto& d = ds[di];
        int ord = d.order();
        auto g = symmetry_group(d);
        auto classes = labeling_classes(d);
        std::map<LabelClassKey, int> index;
        for (size_t i = 0; i < classes.size(); ++i) index[classes[i]] = static_cast<int>(i);

        // label shift l -> l+1 commutes with the symmetry action
        auto shifted = [&](const LabelClassKey& key) {
            std::vector<int> lab = key.second;
            for (int& v : lab) v = v % ord + 1;
            return canonical_key(d, g, key.first, lab);
        };

        DiagramReport rep{d,
                          associated_tree(d).canonical_code(),
                          count_rooted(d, pick_root(d).front()),
                          plantings_count(d),
                          static_cast<Int>(classes.size()),
                          {}};
        std::vector<bool> done(classes.size(), false);
        for (size_t i = 0; i < classes.size(); ++i) {
            if (done[i]) continue;
            Orbit orb{classes[i], 0};
            int cur = static_cast<int>(i);
            do {
                done[cur] = true;
                ++orb.length;
                cur = index.at(shifted(classes[cur]));
            } while (cur != static_cast<int>(i));
            if (ord % orb.length != 0)
                throw CrossCheckError("orbit length does not divide 2n-2 for " + d.to_text());
            rep.orbits.push_back(std::move(orb));
        }
        slots[di] = std::move(rep);
    });
    for (auto& s : slots) out.diagrams.push_back(std::move(*s));
    return out;
}

Int components(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n <= 2) return 1;
    return orbit_decomposition(n).orbit_count();
}

}  // namespace mrat
