#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vzc/qpoly.hpp"
#include "vzc/rational.hpp"

namespace vzc {

struct NeedsTableError : std::runtime_error {
    int m, delta, r;
    NeedsTableError(int m_, int d_, int r_)
        : std::runtime_error("tails oracle budget exceeded: needs table entry (m=" +
                             std::to_string(m_) + ", delta=" + std::to_string(d_) +
                             ", r=" + std::to_string(r_) + ")"),
          m(m_), delta(d_), r(r_) {}
};

// Poincare polynomials of the moduli of stable genus-zero curves, by the
// universal-curve recursion: the fibre over a curve with k nodes has Serre
// characteristic (q+1) + kq, and the node-weighted locus is the disjoint
// union of the normalized boundary divisors.
inline const QPoly& q_mbar0n(int n) {
    static std::vector<QPoly> cache;
    if (n < 3) throw std::domain_error("q_mbar0n: n >= 3 required");
    if ((int)cache.size() > n - 3) return cache[n - 3];
    if (cache.empty()) cache.push_back(QPoly::one());  // M_{0,3} = point
    auto binom = [](int a, int b) {
        long long r = 1;
        for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
        return r;
    };
    while ((int)cache.size() <= n - 3) {
        int cur = (int)cache.size() + 3;  // computing E(Mbar_{0,cur})
        int prev = cur - 1;
        QPoly e = QPoly({1, 1}) * cache[prev - 3];
        QPoly nodes;
        for (int s = 2; s <= prev - 2; ++s)
            nodes += (cache[s + 1 - 3] * cache[prev - s + 1 - 3]).scaled(binom(prev, s));
        e += QPoly({0, 1}) * nodes.scaled(1).divide_exact(QPoly({2}));  // halve ordered pairs
        cache.push_back(e);
    }
    return cache[n - 3];
}

// ---------------------------------------------------------------------------
// Decorated dual trees for the unmarked mapping spaces Mbar_{0,0}(P^r, d):
// the Serre characteristic is the sum over strata of automorphism-invariant
// parts, computed equivariantly through the tree center.
// ---------------------------------------------------------------------------

namespace tails_detail {

struct Tree {
    int V = 1;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> delta;

    std::vector<std::vector<int>> adj() const {
        std::vector<std::vector<int>> a(V);
        for (auto& [x, y] : edges) {
            a[x].push_back(y);
            a[y].push_back(x);
        }
        return a;
    }
};

inline std::string rooted_canon(const Tree& t, const std::vector<std::vector<int>>& a, int v,
                                int parent) {
    std::vector<std::string> kids;
    for (int w : a[v])
        if (w != parent) kids.push_back(rooted_canon(t, a, w, v));
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(t.delta.empty() ? 0 : t.delta[v]);
    for (auto& k : kids) s += k;
    s += ")";
    return s;
}

inline std::string tree_canon(const Tree& t) {
    auto a = t.adj();
    std::string best;
    for (int v = 0; v < t.V; ++v) {
        std::string s = rooted_canon(t, a, v, -1);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

// all unlabelled trees on exactly V vertices
inline std::vector<Tree> all_trees(int V) {
    std::vector<Tree> layer;
    Tree t0;
    t0.V = 1;
    layer.push_back(t0);
    for (int v = 1; v < V; ++v) {
        std::map<std::string, Tree> next;
        for (auto& t : layer)
            for (int at = 0; at < t.V; ++at) {
                Tree u = t;
                u.edges.push_back({at, u.V});
                u.V += 1;
                next.emplace(tree_canon(u), u);
            }
        layer.clear();
        for (auto& [k, u] : next) layer.push_back(u);
    }
    return layer;
}

inline std::vector<std::vector<int>> tree_automorphisms(const Tree& t) {
    std::vector<int> perm(t.V);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<std::pair<int, int>> eset;
    for (auto& [x, y] : t.edges) eset.insert({std::min(x, y), std::max(x, y)});
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int v = 0; v < t.V && ok; ++v)
            if (t.delta[v] != t.delta[perm[v]]) ok = false;
        if (ok)
            for (auto& [x, y] : t.edges)
                if (!eset.count({std::min(perm[x], perm[y]), std::max(perm[x], perm[y])})) {
                    ok = false;
                    break;
                }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// center of a tree: one vertex, or an edge (returned as two vertices)
inline std::vector<int> tree_center(const Tree& t) {
    if (t.V == 1) return {0};
    auto a = t.adj();
    std::vector<int> deg(t.V);
    for (int v = 0; v < t.V; ++v) deg[v] = (int)a[v].size();
    std::vector<char> removed(t.V, 0);
    int left = t.V;
    std::vector<int> frontier;
    for (int v = 0; v < t.V; ++v)
        if (deg[v] <= 1) frontier.push_back(v);
    while (left > 2) {
        std::vector<int> next;
        for (int v : frontier) {
            removed[v] = 1;
            --left;
            for (int w : a[v])
                if (!removed[w] && --deg[w] == 1) next.push_back(w);
        }
        frontier = next;
    }
    std::vector<int> c;
    for (int v = 0; v < t.V; ++v)
        if (!removed[v]) c.push_back(v);
    return c;
}

inline std::vector<int> iterate_perm(const std::vector<int>& h, int times) {
    std::vector<int> out(h.size());
    for (size_t i = 0; i < h.size(); ++i) {
        int y = (int)i;
        for (int s = 0; s < times; ++s) y = h[y];
        out[i] = y;
    }
    return out;
}

// child-subtree orbits of h at vertex v, as (representative, orbit length)
inline std::vector<std::pair<int, int>> child_orbits(const std::vector<std::vector<int>>& a,
                                                     const std::vector<int>& h, int v,
                                                     int parent) {
    std::vector<std::pair<int, int>> orbits;
    std::set<int> done;
    for (int w : a[v]) {
        if (w == parent || done.count(w)) continue;
        int len = 0, x = w;
        do {
            done.insert(x);
            x = h[x];
            ++len;
        } while (x != w);
        orbits.push_back({w, len});
    }
    return orbits;
}

// equivariant fibre polynomial of the subtree rooted at v (attached by an
// upward edge that h fixes), for an automorphism h of the subtree. The
// vertex factor is traced with the induced permutation of its special
// points: the fixed upward edge plus one j-cycle per child-subtree orbit of
// length j.
inline QPoly subtree_fibre(const Tree& t, const std::vector<std::vector<int>>& a, int r,
                           const std::vector<int>& h, int v, int parent) {
    auto orbits = child_orbits(a, h, v, parent);
    std::vector<int> cycle_type{1};  // the upward edge
    for (auto& [w, len] : orbits) cycle_type.push_back(len);
    QPoly f = q_open_maps_fibre_trace(cycle_type, t.delta[v], r);
    for (auto& [w, len] : orbits)
        f *= subtree_fibre(t, a, r, iterate_perm(h, len), w, v).power_substitute(len);
    return f;
}

inline QPoly stratum_trace(const Tree& t, int r, const std::vector<int>& h) {
    auto a = t.adj();
    std::vector<int> center = tree_center(t);
    if (center.size() == 1) {
        int c = center[0];
        auto orbits = child_orbits(a, h, c, -1);
        std::vector<int> cycle_type;
        for (auto& [w, len] : orbits) cycle_type.push_back(len);
        QPoly e = q_open_maps_trace(cycle_type, t.delta[c], r);
        for (auto& [w, len] : orbits)
            e *= subtree_fibre(t, a, r, iterate_perm(h, len), w, c).power_substitute(len);
        return e;
    }
    int u = center[0], v = center[1];
    bool swapped = h[u] == v;
    if (!swapped) {
        return q_projective(r) * subtree_fibre(t, a, r, h, u, v) *
               subtree_fibre(t, a, r, h, v, u);
    }
    // h exchanges the two halves of the central edge
    return q_projective(r) * subtree_fibre(t, a, r, iterate_perm(h, 2), u, v).power_substitute(2);
}

}  // namespace tails_detail

// E(Mbar_{0,0}(P^r, d)) by the decorated-tree strata sum
inline QPoly q_mbar00_maps(int delta, int r, int max_vertices) {
    using namespace tails_detail;
    if (delta < 1) throw std::domain_error("q_mbar00_maps: delta >= 1 required");
    QPoly total;
    for (int V = 1; V <= max_vertices; ++V) {
        for (auto& shape : all_trees(V)) {
            // decorate: degrees summing to delta; degree-zero vertices need
            // tree valence >= 3
            auto a = shape.adj();
            std::vector<int> degs(V, 0);
            std::set<std::string> seen;
            std::function<void(int, int)> rec = [&](int i, int left) {
                if (i == V) {
                    if (left != 0) return;
                    Tree t = shape;
                    t.delta = degs;
                    for (int v = 0; v < V; ++v)
                        if (degs[v] == 0 && (int)a[v].size() < 3) return;
                    if (!seen.insert(tree_canon(t)).second) return;
                    auto auts = tree_automorphisms(t);
                    QPoly acc;
                    for (auto& h : auts) acc += stratum_trace(t, r, h);
                    // Burnside average: divide by |Aut| exactly
                    total += acc.divide_exact(QPoly({(long long)auts.size()}));
                    return;
                }
                for (int x = 0; x <= left; ++x) {
                    degs[i] = x;
                    rec(i + 1, left - x);
                }
            };
            rec(0, delta);
        }
    }
    return total;
}

// ---------------------------------------------------------------------------
// The oracle with table overrides and a budget.
// ---------------------------------------------------------------------------

struct TailsOracleOptions {
    int max_delta = 5;        // largest degree handled by the built-in oracle
    int max_vertices = 8;     // tree budget for the unmarked bases
    int max_marks = 8;
};

class TailsOracle {
public:
    explicit TailsOracle(TailsOracleOptions opt = {}) : opt_(opt) {}

    void set_table_entry(int m, int delta, int r, QPoly p) {
        table_[{m, delta, r}] = std::move(p);
    }

    // E(Mbar_{0,m}(P^r, delta)); markings all distinct, delta >= 0
    const QPoly& mbar_maps(int m, int delta, int r) {
        auto key = std::make_tuple(m, delta, r);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        auto tt = table_.find(key);
        if (tt != table_.end()) return cache_.emplace(key, tt->second).first->second;
        QPoly e = compute(m, delta, r);
        return cache_.emplace(key, std::move(e)).first->second;
    }

    // Poincare series of the evaluation fibre Mbar*_{0,m}(P^r, delta)
    HodgeSeries tails_poincare(int m, int delta, int r) {
        if (delta == 0 && m < 2)
            throw std::domain_error("tails_poincare: unstable zero-degree tail");
        QPoly p = mbar_maps(m + 1, delta, r).divide_exact(q_projective(r));
        return p.to_series();
    }

private:
    QPoly compute(int m, int delta, int r) {
        if (delta == 0) {
            if (m < 3) throw std::domain_error("mbar_maps: unstable");
            return q_mbar0n(m) * q_projective(r);
        }
        if (delta > opt_.max_delta || m > opt_.max_marks) throw NeedsTableError(m, delta, r);
        if (m == 0) {
            int vmax = std::min(opt_.max_vertices, std::max(1, 2 * delta - 2));
            return q_mbar00_maps(delta, r, vmax);
        }
        // universal-curve recursion over Mbar_{0,m-1}(P^r, delta)
        QPoly base = mbar_maps(m - 1, delta, r);
        QPoly e = QPoly({1, 1}) * base;
        int prev = m - 1;
        QPoly nodes;
        // ordered pairs ((S, d1), (S^c, delta - d1)) over subsets of the
        // first m-1 markings, halved; the self-paired divisor (only when
        // m - 1 = 0 and delta even) is handled equivariantly
        for (int mask = 0; mask < (1 << prev); ++mask) {
            int s = __builtin_popcount(mask);
            for (int d1 = 0; d1 <= delta; ++d1) {
                int d2 = delta - d1;
                int legs1 = s + 1, legs2 = prev - s + 1;
                if (d1 == 0 && legs1 < 3) continue;
                if (d2 == 0 && legs2 < 3) continue;
                if (prev == 0 && 2 * d1 == delta) continue;  // self-paired, below
                nodes += mbar_maps(legs1, d1, r) * mbar_maps(legs2, d2, r);
            }
        }
        nodes = nodes.divide_exact(q_projective(r)).divide_exact(QPoly({2}));
        if (prev == 0 && delta % 2 == 0) {
            QPoly f = mbar_maps(1, delta / 2, r).divide_exact(q_projective(r));
            QPoly inv = (f * f + f.power_substitute(2)).divide_exact(QPoly({2}));
            nodes += inv * q_projective(r);
        }
        e += QPoly({0, 1}) * nodes;
        return e;
    }

    TailsOracleOptions opt_;
    std::map<std::tuple<int, int, int>, QPoly> table_;
    std::map<std::tuple<int, int, int>, QPoly> cache_;
};

inline HodgeSeries mbar0n_poincare(int n) { return q_mbar0n(n).to_series(); }

}  // namespace vzc
