#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace vzc {

// ---------------------------------------------------------------------------
// Decorated dual graphs of genus one: connected multigraphs with genus,
// degree, and marking decorations, first Betti number + total genus = 1.
// ---------------------------------------------------------------------------

struct Vertex {
    int genus = 0;   // w(v)
    int degree = 0;  // delta(v)
};

struct DualGraph {
    std::vector<Vertex> vertices;
    std::vector<std::pair<int, int>> edges;  // unordered pairs, loops allowed
    std::vector<int> markings;               // markings[i] = vertex of mark i+1
    int ambient_n = 0;
    int ambient_d = 0;

    int num_vertices() const { return (int)vertices.size(); }
    int num_edges() const { return (int)edges.size(); }

    int valence(int v) const {
        int val = 0;
        for (auto& [a, b] : edges) {
            if (a == v) ++val;
            if (b == v) ++val;  // loops count twice
        }
        return val;
    }
    int marks_at(int v) const {
        int m = 0;
        for (int x : markings)
            if (x == v) ++m;
        return m;
    }
    std::vector<int> mark_labels_at(int v) const {
        std::vector<int> out;
        for (int i = 0; i < (int)markings.size(); ++i)
            if (markings[i] == v) out.push_back(i + 1);
        return out;
    }

    bool connected() const {
        int n = num_vertices();
        if (n == 0) return false;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto& [a, b] : edges) {
                if (a == v && !seen[b]) { seen[b] = 1; stack.push_back(b); }
                if (b == v && !seen[a]) { seen[a] = 1; stack.push_back(a); }
            }
        }
        return std::all_of(seen.begin(), seen.end(), [](char c) { return c; });
    }

    int betti1() const { return num_edges() - num_vertices() + 1; }
    int total_genus() const {
        int g = betti1();
        for (auto& v : vertices) g += v.genus;
        return g;
    }
    int total_degree() const {
        int d = 0;
        for (auto& v : vertices) d += v.degree;
        return d;
    }

    // the four defining conditions of a (1,n,d)-graph
    bool valid(std::string* why = nullptr) const {
        auto fail = [&](const char* msg) {
            if (why) *why = msg;
            return false;
        };
        if (!connected()) return fail("not connected");
        if (total_genus() != 1) return fail("betti1 + sum of genera != 1");
        if (total_degree() != ambient_d) return fail("degrees do not sum to d");
        if ((int)markings.size() != ambient_n) return fail("marking map not total on {1..n}");
        for (int m : markings)
            if (m < 0 || m >= num_vertices()) return fail("marking out of range");
        for (auto& [a, b] : edges)
            if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices())
                return fail("edge out of range");
        return true;
    }
};

// Stability: every degree-zero vertex needs 2w - 2 + val + #marks > 0.
// Loops contribute 2 to the valence.
inline bool is_stable(const DualGraph& g) {
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (g.vertices[v].degree > 0) continue;
        if (2 * g.vertices[v].genus - 2 + g.valence(v) + g.marks_at(v) <= 0) return false;
    }
    return true;
}

// Contract edge e: merge endpoints (adding genus/degree, joining markings),
// or increment genus if e is a loop. Other edges are re-targeted; edges
// parallel to e become loops.
inline DualGraph contract_edge(const DualGraph& g, int e) {
    if (e < 0 || e >= g.num_edges()) throw std::out_of_range("contract_edge: no such edge");
    auto [a, b] = g.edges[e];
    DualGraph r;
    r.ambient_n = g.ambient_n;
    r.ambient_d = g.ambient_d;
    if (a == b) {
        r = g;
        r.edges.erase(r.edges.begin() + e);
        r.vertices[a].genus += 1;
        return r;
    }
    int lo = std::min(a, b), hi = std::max(a, b);
    auto remap = [&](int v) { return v == hi ? lo : (v > hi ? v - 1 : v); };
    for (int v = 0; v < g.num_vertices(); ++v)
        if (v != hi) r.vertices.push_back(g.vertices[v]);
    r.vertices[lo].genus += g.vertices[hi].genus;
    r.vertices[lo].degree += g.vertices[hi].degree;
    for (int i = 0; i < g.num_edges(); ++i) {
        if (i == e) continue;
        r.edges.push_back({remap(g.edges[i].first), remap(g.edges[i].second)});
    }
    for (int m : g.markings) r.markings.push_back(remap(m));
    return r;
}

// The core: the unique genus-one vertex, or the vertex set of the unique
// cycle (which may be a loop).
inline std::vector<int> core(const DualGraph& g) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.vertices[v].genus == 1) return {v};
    // betti1 == 1: peel leaves until only the cycle remains
    int n = g.num_vertices();
    std::vector<int> deg(n, 0);
    for (auto& [a, b] : g.edges) {
        if (a == b) return {a};  // loop
        ++deg[a];
        ++deg[b];
    }
    std::vector<char> removed(n, 0);
    std::vector<std::pair<int, int>> live = g.edges;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            if (!removed[v] && deg[v] == 1) {
                removed[v] = 1;
                changed = true;
                for (auto& [a, b] : live) {
                    if (a == v || b == v) {
                        int o = a == v ? b : a;
                        if (!removed[o]) --deg[o];
                        a = b = -1;
                        --deg[v];
                    }
                }
            }
        }
    }
    std::vector<int> cyc;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) cyc.push_back(v);
    if (cyc.empty()) throw std::logic_error("core: no genus-one subgraph found");
    return cyc;
}

// Poset of vertices: core vertices are tied as the unique minimum; a non-core
// vertex sits above everything on its path to the core. Returned as parent
// pointers (parent = next vertex toward the core, -1 on the core) plus a
// depth map for convenience.
struct VertexPoset {
    std::vector<int> parent;  // -1 for core vertices
    std::vector<int> depth;   // 0 on the core
    std::vector<char> in_core;

    // u <= v in the poset (u on the path from v to the core, or u in core)
    bool leq(int u, int v) const {
        if (in_core[u]) return true;
        while (v != -1) {
            if (v == u) return true;
            v = parent[v];
        }
        return false;
    }
    bool comparable(int u, int v) const { return leq(u, v) || leq(v, u); }
};

inline VertexPoset vertex_poset(const DualGraph& g) {
    std::vector<int> cr = core(g);
    int n = g.num_vertices();
    VertexPoset p;
    p.parent.assign(n, -1);
    p.depth.assign(n, 0);
    p.in_core.assign(n, 0);
    for (int v : cr) p.in_core[v] = 1;
    std::vector<int> queue = cr;
    std::vector<char> seen(n, 0);
    for (int v : cr) seen[v] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (auto& [a, b] : g.edges) {
            for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
                if (x == v && !seen[y]) {
                    seen[y] = 1;
                    p.parent[y] = v;
                    p.depth[y] = p.depth[v] + 1;
                    queue.push_back(y);
                }
            }
        }
    }
    for (int v : cr) p.parent[v] = -1;
    return p;
}

// Enhancement of a subgraph: induced decorations plus one leg per cut edge.
struct EnhancedSubgraph {
    DualGraph graph;                 // induced subgraph, reindexed
    std::vector<int> legs;           // legs[i] = vertex (new index) of the i-th extra leg
    std::vector<int> vertex_map;     // new index -> original index
    std::vector<int> kept_markings;  // original mark labels kept (those landing in s)
};

inline EnhancedSubgraph enhancement(const DualGraph& g, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("enhancement: empty vertex set");
    std::vector<int> newidx(g.num_vertices(), -1);
    EnhancedSubgraph out;
    for (int v : s) {
        newidx[v] = (int)out.graph.vertices.size();
        out.graph.vertices.push_back(g.vertices[v]);
        out.vertex_map.push_back(v);
    }
    for (auto& [a, b] : g.edges) {
        bool ina = newidx[a] >= 0, inb = newidx[b] >= 0;
        if (ina && inb)
            out.graph.edges.push_back({newidx[a], newidx[b]});
        else if (ina)
            out.legs.push_back(newidx[a]);
        else if (inb)
            out.legs.push_back(newidx[b]);
    }
    for (int i = 0; i < (int)g.markings.size(); ++i) {
        if (newidx[g.markings[i]] >= 0) {
            out.graph.markings.push_back(newidx[g.markings[i]]);
            out.kept_markings.push_back(i + 1);
        }
    }
    out.graph.ambient_n = (int)out.graph.markings.size();
    out.graph.ambient_d = out.graph.total_degree();
    return out;
}

// ---------------------------------------------------------------------------
// Central alignments.
// ---------------------------------------------------------------------------

struct CentralAlignment {
    std::vector<int> support;      // vertex subset G_rho
    std::map<int, int> level;      // support vertex -> level in {0..depth}
    int depth = 1;                 // |rho| >= 1
};

struct AlignmentReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string v) {
        ok = false;
        violations.push_back(std::move(v));
    }
};

// The four conditions on (G_rho, rho): support connected and containing the
// core, level^{-1}(0) = core exactly, positive degrees only on the top level
// with sum >= 2, and levels monotone for the vertex poset. Along an edge the
// level must strictly increase (two ends of an edge are at distinct distances
// from the core).
inline AlignmentReport validate_alignment(const DualGraph& g, const CentralAlignment& a) {
    AlignmentReport rep;
    std::set<int> supp(a.support.begin(), a.support.end());
    for (int v : supp)
        if (v < 0 || v >= g.num_vertices()) {
            rep.fail("support vertex out of range");
            return rep;
        }
    if (a.depth < 1) rep.fail("depth must be >= 1");
    for (int v : a.support) {
        auto it = a.level.find(v);
        if (it == a.level.end() || it->second < 0 || it->second > a.depth)
            rep.fail("level map not defined into {0..depth} on support");
    }
    if (!rep.ok) return rep;

    // (1) support contains the core and is connected
    std::vector<int> cr = core(g);
    for (int v : cr)
        if (!supp.count(v)) rep.fail("support does not contain the core");
    if (supp.empty()) {
        rep.fail("support is empty");
        return rep;
    }
    {
        std::set<int> seen{*supp.begin()};
        std::vector<int> stack{*supp.begin()};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (auto& [x, y] : g.edges) {
                if (x == v && supp.count(y) && !seen.count(y)) { seen.insert(y); stack.push_back(y); }
                if (y == v && supp.count(x) && !seen.count(x)) { seen.insert(x); stack.push_back(x); }
            }
        }
        if (seen.size() != supp.size()) rep.fail("support not connected");
    }

    // (2) level^{-1}(0) equals the core
    std::set<int> core_set(cr.begin(), cr.end());
    for (int v : a.support) {
        int lv = a.level.at(v);
        if (lv == 0 && !core_set.count(v)) rep.fail("level 0 contains a non-core vertex");
        if (lv != 0 && core_set.count(v)) rep.fail("core vertex not at level 0");
    }

    // (3) positive degree only on the top level, degrees summing to > 1
    int top_sum = 0;
    for (int v : a.support) {
        if (g.vertices[v].degree > 0 && a.level.at(v) != a.depth)
            rep.fail("positive-degree support vertex below the top level");
        if (a.level.at(v) == a.depth) top_sum += g.vertices[v].degree;
    }
    if (top_sum <= 1) rep.fail("top-level degrees sum to <= 1");

    // (4) monotone for the vertex poset; strict along edges
    VertexPoset poset = vertex_poset(g);
    for (int u : a.support)
        for (int v : a.support) {
            if (u == v) continue;
            if (poset.leq(u, v) && !poset.in_core[u] && a.level.at(u) > a.level.at(v))
                rep.fail("level map not monotone for the vertex poset");
        }
    for (auto& [x, y] : g.edges) {
        if (x == y) continue;
        if (supp.count(x) && supp.count(y)) {
            int lx = a.level.at(x), ly = a.level.at(y);
            if (lx == ly && !(core_set.count(x) && core_set.count(y)))
                rep.fail("edge joins two support vertices on the same level");
        }
    }
    return rep;
}

// Radial merge along level i: all levels >= i drop by one, and every edge
// between (old) levels i-1 and i is contracted. Returns the merged graph and
// the merged alignment, or no alignment when the depth reaches zero (the core
// has acquired positive degree).
struct RadialMergeResult {
    DualGraph graph;
    std::optional<CentralAlignment> alignment;
    AlignmentReport validity;  // of the output alignment, when present
};

inline RadialMergeResult radial_merge(const DualGraph& g, const CentralAlignment& a, int i) {
    if (i < 1 || i > a.depth) throw std::out_of_range("radial_merge: level index out of range");
    // track vertices through contractions by original representative ids
    DualGraph cur = g;
    std::vector<int> ids(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) ids[v] = v;
    std::map<int, int> lvl;  // representative id -> level (support only)
    for (int v : a.support) lvl[v] = a.level.at(v);

    bool again = true;
    while (again) {
        again = false;
        for (int e = 0; e < cur.num_edges() && !again; ++e) {
            auto [x, y] = cur.edges[e];
            if (x == y) continue;
            auto lx = lvl.find(ids[x]), ly = lvl.find(ids[y]);
            if (lx == lvl.end() || ly == lvl.end()) continue;
            int a1 = lx->second, a2 = ly->second;
            if ((a1 == i - 1 && a2 == i) || (a1 == i && a2 == i - 1)) {
                int lo = std::min(x, y), hi = std::max(x, y);
                lvl.erase(ids[hi]);
                lvl[ids[lo]] = i - 1;  // merged vertex sits at the lower level
                cur = contract_edge(cur, e);
                ids.erase(ids.begin() + hi);
                again = true;
            }
        }
    }
    RadialMergeResult out;
    out.graph = cur;
    int new_depth = a.depth - 1;
    if (new_depth == 0) return out;  // unaligned: positive-degree core
    CentralAlignment na;
    na.depth = new_depth;
    for (int v = 0; v < cur.num_vertices(); ++v) {
        auto it = lvl.find(ids[v]);
        if (it != lvl.end()) {
            na.support.push_back(v);
            na.level[v] = it->second >= i ? it->second - 1 : it->second;
        }
    }
    out.validity = validate_alignment(cur, na);
    out.alignment = std::move(na);
    return out;
}

// Rational tails: maximal connected subgraphs avoiding the support (or, for a
// positive-degree core with no alignment, avoiding the core).
struct TailSummary {
    int attach = 0;              // support/core vertex it hangs from
    int degree = 0;              // summed degree
    std::vector<int> marks;      // mark labels, sorted
    std::vector<int> vertices;   // original vertex indices
};

inline std::vector<TailSummary> rational_tails(const DualGraph& g, const std::vector<int>& kept) {
    std::set<int> keep(kept.begin(), kept.end());
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int v = 0; v < n; ++v) {
        if (keep.count(v) || comp[v] >= 0) continue;
        std::vector<int> stack{v};
        comp[v] = ncomp;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (auto& [a, b] : g.edges)
                for (auto [p, q] : {std::pair{a, b}, std::pair{b, a}})
                    if (p == x && !keep.count(q) && comp[q] < 0) {
                        comp[q] = ncomp;
                        stack.push_back(q);
                    }
        }
        ++ncomp;
    }
    std::vector<TailSummary> tails(ncomp);
    for (int v = 0; v < n; ++v) {
        if (comp[v] < 0) continue;
        tails[comp[v]].degree += g.vertices[v].degree;
        tails[comp[v]].vertices.push_back(v);
        for (int l : g.mark_labels_at(v)) tails[comp[v]].marks.push_back(l);
    }
    for (auto& [a, b] : g.edges) {
        if (keep.count(a) != keep.count(b)) {
            int tv = keep.count(a) ? b : a;
            int kv = keep.count(a) ? a : b;
            tails[comp[tv]].attach = kv;
        }
    }
    for (auto& t : tails) std::sort(t.marks.begin(), t.marks.end());
    return tails;
}

}  // namespace vzc
