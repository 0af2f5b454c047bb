#include "mrat/updown.hpp"

#include <algorithm>
#include <stdexcept>

#include "mrat/labeling.hpp"

namespace mrat {

std::string updown_word_of(const std::vector<int>& perm) {
    std::string w;
    for (size_t i = 0; i + 1 < perm.size(); ++i)
        w.push_back(perm[i] < perm[i + 1] ? 'U' : 'D');
    return w;
}

namespace {

void check_word(const std::string& w) {
    for (char c : w)
        if (c != 'U' && c != 'D') throw std::invalid_argument("word must be over {U,D}");
}

}  // namespace

Int count_updown_bruteforce(const std::string& word) {
    check_word(word);
    int len = static_cast<int>(word.size());
    if (len > 11) throw std::invalid_argument("brute force capped at word length 11");
    int n = len + 1;
    Int count = 0;
    std::vector<int> perm;
    std::vector<bool> used(n + 1, false);
    auto rec = [&](auto&& self) -> void {
        int i = static_cast<int>(perm.size());
        if (i == n) {
            ++count;
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            if (i > 0) {
                bool up = perm[i - 1] < v;
                if (up != (word[i - 1] == 'U')) continue;
            }
            used[v] = true;
            perm.push_back(v);
            self(self);
            perm.pop_back();
            used[v] = false;
        }
    };
    rec(rec);
    return count;
}

std::vector<int> descent_set(const std::string& word) {
    check_word(word);
    std::vector<int> s;
    for (size_t i = 0; i < word.size(); ++i)
        if (word[i] == 'D') s.push_back(static_cast<int>(i) + 1);
    return s;
}

namespace {

// fraction-free Bareiss determinant
Int det_bareiss(std::vector<std::vector<Int>> a) {
    int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Int det_binomial(const std::vector<int>& svals) {
    // svals = (s_0=0, s_1, ..., s_k, s_{k+1}=n); matrix is (k+1)x(k+1)
    int k1 = static_cast<int>(svals.size()) - 1;
    std::vector<std::vector<Int>> a(k1, std::vector<Int>(k1));
    for (int i = 1; i <= k1; ++i)
        for (int j = 1; j <= k1; ++j) a[i - 1][j - 1] = binomial(svals[i], svals[j - 1]);
    return det_bareiss(std::move(a));
}

}  // namespace

Int count_updown_determinant(const std::string& word) {
    check_word(word);
    int n = static_cast<int>(word.size()) + 1;
    std::vector<int> s{0};
    for (int d : descent_set(word)) s.push_back(d);
    s.push_back(n);
    return det_binomial(s);
}

std::vector<int> build_svalues(const std::vector<int>& delta) {
    for (int d : delta)
        if (d < 2 || d % 2 != 0) throw std::invalid_argument("delta entries must be even, >= 2");
    int e = 1;
    for (int d : delta) e += d / 2;
    std::vector<int> eps;
    int acc = 0;
    for (int d : delta) eps.push_back(acc += d);
    std::vector<int> s{0};
    // pairs (eps_1, eps_2), (eps_3, eps_4), ...; a trailing unpaired eps_k
    // contributes nothing (the word ends with a U-run)
    for (size_t i = 0; i + 1 < eps.size(); i += 2)
        for (int v = eps[i] + 1; v <= eps[i + 1]; ++v) s.push_back(v);
    s.push_back(2 * e - 1);
    for (size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] >= s[i + 1]) throw std::logic_error("s-sequence not strictly increasing");
    return s;
}

Int count_from_svalues(const std::vector<int>& s) { return det_binomial(s); }

std::string caterpillar_word(const std::vector<int>& delta) {
    std::string w;
    for (size_t i = 0; i < delta.size(); ++i) w.append(delta[i], i % 2 == 0 ? 'U' : 'D');
    return w;
}

std::string two_up_two_down_word(int k) {
    if (k < 1 || k % 2 == 0) throw std::invalid_argument("2up-2down needs odd k >= 1");
    std::string w;
    int len = k - 1;
    for (int i = 0; i < len; ++i) w.push_back(i % 4 < 2 ? 'U' : 'D');
    if (k % 4 != 1 && k % 4 != 3) throw std::logic_error("unreachable");
    return w;
}

Int two_up_two_down(int k) { return count_updown_determinant(two_up_two_down_word(k)); }

Int sharp_path(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    return Int(n) * two_up_two_down(2 * n - 1);
}

Int sharp_caterpillar(const CaterpillarType& type, int aut_plus_order,
                      bool orientation_symmetric) {
    int e = type.edge_count();
    int num = (orientation_symmetric ? 2 : 4) * e;
    if (num % aut_plus_order != 0)
        throw std::logic_error("|Aut(D+)| does not divide " + std::to_string(num));
    int n_star = num / aut_plus_order;
    return Int(n_star) * count_from_svalues(build_svalues(type.delta));
}

Int euler_bernoulli(int k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    if (k == 0) return 1;
    std::string w;
    for (int i = 0; i < k - 1; ++i) w.push_back(i % 2 == 0 ? 'U' : 'D');
    return count_updown_determinant(w);
}

std::vector<int> bijection_corners(const OrientedDiagram& d) {
    int n = d.diagram().order();
    std::vector<int> out;
    for (int c = 0; c < n; ++c) {
        int p = d.diagram().partner(c);
        if ((p == (c + 1) % n || p == (c + n - 1) % n) && d.chord_forward(c)) out.push_back(c);
    }
    return out;
}

namespace {

// index of x in the sorted set r
int rank_of(const std::vector<int>& r, int x) {
    auto it = std::lower_bound(r.begin(), r.end(), x);
    if (it == r.end() || *it != x) throw std::logic_error("label not in cyclic set");
    return static_cast<int>(it - r.begin());
}

// elements of r strictly between x and y, cyclically upward from x
int between(const std::vector<int>& r, int x, int y) {
    int sz = static_cast<int>(r.size());
    return ((rank_of(r, y) - rank_of(r, x) - 1) % sz + sz) % sz;
}

void erase_val(std::vector<int>& r, int x) {
    r.erase(r.begin() + rank_of(r, x));
}

}  // namespace

std::vector<int> path_bijection(const OrientedDiagram& d, const std::vector<int>& labels,
                                    int corner) {
    const ChordDiagram& cd = d.diagram();
    int n = cd.order();  // 2n' with path length n' = n/2
    auto ct = caterpillar_type(associated_tree(cd));
    if (!ct || !std::all_of(ct->delta.begin(), ct->delta.end(), [](int x) { return x == 2; }))
        throw std::invalid_argument("bijection needs a path-type diagram");
    int cprime = cd.partner(corner);
    bool adjacent = cprime == (corner + 1) % n || cprime == (corner + n - 1) % n;
    if (!adjacent || !d.chord_forward(corner))
        throw std::invalid_argument("corner chord must be directed from c to c'");
    if (labels[corner] != 1) throw std::invalid_argument("corner must carry label 1");
    if (!is_proper({d, labels})) throw std::invalid_argument("labeling is not proper");

    // unique walk visiting every vertex, starting along the corner chord
    std::vector<int> walk{corner, cprime};
    std::vector<bool> visited(n, false);
    visited[corner] = visited[cprime] = true;
    // steps alternate chord, arc, chord, ... starting with the corner chord
    while (static_cast<int>(walk.size()) < n) {
        int v = walk.back();
        std::vector<int> fresh;
        bool chord_step = walk.size() % 2 == 1;
        if (chord_step) {
            if (!visited[cd.partner(v)]) fresh.push_back(cd.partner(v));
        } else {
            for (int w : {(v + 1) % n, (v - 1 + n) % n})
                if (!visited[w]) fresh.push_back(w);
        }
        if (fresh.size() != 1) throw std::logic_error("walk is not forced");
        visited[fresh[0]] = true;
        walk.push_back(fresh[0]);
    }
    std::vector<int> lbl;
    lbl.reserve(n);
    for (int v : walk) lbl.push_back(labels[v]);

    std::vector<int> cyc(n), lin(n - 1);
    for (int i = 0; i < n; ++i) cyc[i] = i + 1;
    for (int i = 0; i < n - 1; ++i) lin[i] = i + 1;

    std::vector<int> sigma(n - 1, 0);
    int steps = n / 2 - 1;  // quadruples, one per square face
    for (int k = 1; k <= steps; ++k) {
        int r = lbl[2 * k - 2], a = lbl[2 * k - 1], b = lbl[2 * k], c = lbl[2 * k + 1];
        int f1 = between(cyc, r, a);
        int f2 = between(cyc, a, b);
        int f4 = between(cyc, c, r);
        int sz = static_cast<int>(lin.size());
        int t1, t2, t3;
        if (k % 2 == 1) {  // increasing triple
            t1 = lin[f1];
            t2 = lin[f1 + f2 + 1];
            t3 = lin[f1 + f2 + f4 + 2];
        } else {  // decreasing triple
            t1 = lin[sz - 1 - f1];
            t2 = lin[sz - 2 - f1 - f2];
            t3 = lin[sz - 3 - f1 - f2 - f4];
        }
        if (k == 1) {
            sigma[0] = t1;
            sigma[1] = t2;
            sigma[2] = t3;
        } else {
            if (t1 != sigma[2 * k - 2]) throw std::logic_error("triples do not glue");
            sigma[2 * k - 1] = t2;
            sigma[2 * k] = t3;
        }
        erase_val(cyc, lbl[2 * k - 2]);
        erase_val(cyc, lbl[2 * k - 1]);
        erase_val(lin, sigma[2 * k - 2]);
        erase_val(lin, sigma[2 * k - 1]);
    }
    if (steps == 0) sigma.assign(1, 1);  // single-chord diagram
    return sigma;
}

}  // namespace mrat
