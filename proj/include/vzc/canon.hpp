#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vzc/coarse.hpp"
#include "vzc/graphs.hpp"

namespace vzc {

// ---------------------------------------------------------------------------
// Canonical forms and automorphism groups of decorated multigraphs: colour
// refinement seeded by (genus, degree, level, marks, valence), then a
// backtracking individualization search taking the lexicographically least
// certificate. Desk-scale graphs only; correctness over asymptotics.
// ---------------------------------------------------------------------------

namespace canon_detail {

struct Coloured {
    const DualGraph* g;
    std::vector<int> level;   // -1 when absent
    std::vector<int> colour;  // current colour classes

    std::vector<std::vector<int>> adj_mult;  // vertex x vertex edge multiplicity
    std::vector<int> loops;

    void init(const DualGraph& graph, const std::optional<CentralAlignment>& al) {
        g = &graph;
        int n = graph.num_vertices();
        level.assign(n, -1);
        if (al)
            for (int v : al->support) level[v] = al->level.at(v);
        adj_mult.assign(n, std::vector<int>(n, 0));
        loops.assign(n, 0);
        for (auto& [a, b] : graph.edges) {
            if (a == b)
                ++loops[a];
            else {
                ++adj_mult[a][b];
                ++adj_mult[b][a];
            }
        }
        // seed colours by full local invariants; mark labels are rigid
        std::vector<std::string> seed(n);
        for (int v = 0; v < n; ++v) {
            std::ostringstream os;
            os << graph.vertices[v].genus << "," << graph.vertices[v].degree << "," << level[v]
               << "," << loops[v] << "," << graph.valence(v) << ",m";
            for (int m : graph.mark_labels_at(v)) os << m << ".";
            seed[v] = os.str();
        }
        std::vector<std::string> sorted = seed;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        colour.assign(n, 0);
        for (int v = 0; v < n; ++v)
            colour[v] = (int)(std::lower_bound(sorted.begin(), sorted.end(), seed[v]) -
                              sorted.begin());
        refine();
    }

    void refine() {
        int n = g->num_vertices();
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::pair<int, std::vector<std::pair<int, int>>>> sig(n);
            for (int v = 0; v < n; ++v) {
                std::vector<std::pair<int, int>> nb;
                for (int u = 0; u < n; ++u)
                    if (adj_mult[v][u]) nb.push_back({colour[u], adj_mult[v][u]});
                std::sort(nb.begin(), nb.end());
                sig[v] = {colour[v], std::move(nb)};
            }
            auto sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            for (int v = 0; v < n; ++v) {
                int nc = (int)(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) -
                               sorted.begin());
                if (nc != colour[v]) changed = true;
                colour[v] = nc;
            }
        }
    }

    // first colour class with more than one vertex, or -1 if discrete
    int first_split_cell() const {
        int n = g->num_vertices();
        std::map<int, int> count;
        for (int v = 0; v < n; ++v) ++count[colour[v]];
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (count[colour[v]] > 1 && (best == -1 || colour[v] < colour[best])) best = v;
        return best == -1 ? -1 : colour[best];
    }

    std::string certificate(std::vector<int>* order_out) const {
        int n = g->num_vertices();
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return colour[a] < colour[b]; });
        std::vector<int> pos(n);
        for (int i = 0; i < n; ++i) pos[order[i]] = i;
        std::ostringstream os;
        for (int i = 0; i < n; ++i) {
            int v = order[i];
            os << "(" << g->vertices[v].genus << "," << g->vertices[v].degree << "," << level[v]
               << ",m";
            for (int m : g->mark_labels_at(v)) os << m << ".";
            os << ")";
        }
        std::vector<std::pair<int, int>> es;
        for (auto& [a, b] : g->edges) {
            int x = pos[a], y = pos[b];
            es.push_back({std::min(x, y), std::max(x, y)});
        }
        std::sort(es.begin(), es.end());
        os << "E";
        for (auto& [a, b] : es) os << a << "-" << b << ";";
        if (order_out) *order_out = order;
        return os.str();
    }
};

inline void search(Coloured state, std::string& best, std::vector<std::vector<int>>& leaf_orders,
                   int depth_budget) {
    int cell = state.first_split_cell();
    if (cell < 0) {
        std::vector<int> order;
        std::string cert = state.certificate(&order);
        if (best.empty() || cert < best) {
            best = cert;
            leaf_orders.clear();
            leaf_orders.push_back(order);
        } else if (cert == best) {
            leaf_orders.push_back(order);
        }
        return;
    }
    int n = state.g->num_vertices();
    for (int v = 0; v < n; ++v) {
        if (state.colour[v] != cell) continue;
        Coloured child = state;
        // individualize v: give it a fresh colour below its cell
        for (int u = 0; u < n; ++u)
            child.colour[u] = 2 * child.colour[u] + (u == v ? 0 : 1);
        child.refine();
        search(std::move(child), best, leaf_orders, depth_budget - 1);
    }
}

}  // namespace canon_detail

struct CanonicalForm {
    std::string certificate;
    std::vector<int> relabel;  // relabel[new index] = old index
};

inline CanonicalForm canonical_form(const DualGraph& g,
                                    const std::optional<CentralAlignment>& al = std::nullopt) {
    canon_detail::Coloured c;
    c.init(g, al);
    std::string best;
    std::vector<std::vector<int>> leaves;
    canon_detail::search(c, best, leaves, 64);
    CanonicalForm out;
    out.certificate = best;
    out.relabel = leaves.front();
    return out;
}

struct AutGroup {
    std::vector<std::vector<int>> generators;  // vertex permutations
    long long order = 1;                       // includes parallel-edge / loop flips
    long long vertex_order = 1;                // vertex permutations only
};

// multiplicity factor: parallel edge swaps and loop half-edge flips
inline long long edge_symmetry_factor(const DualGraph& g) {
    long long f = 1;
    std::map<std::pair<int, int>, int> mult;
    std::map<int, int> loops;
    for (auto& [a, b] : g.edges) {
        if (a == b)
            ++loops[a];
        else
            ++mult[{std::min(a, b), std::max(a, b)}];
    }
    auto fact = [](int m) {
        long long r = 1;
        for (int i = 2; i <= m; ++i) r *= i;
        return r;
    };
    for (auto& [k, m] : mult) f *= fact(m);
    for (auto& [v, m] : loops) f *= fact(m) << m;
    return f;
}

inline AutGroup aut_group(const DualGraph& g,
                          const std::optional<CentralAlignment>& al = std::nullopt) {
    canon_detail::Coloured c;
    c.init(g, al);
    std::string best;
    std::vector<std::vector<int>> leaves;
    canon_detail::search(c, best, leaves, 64);
    AutGroup out;
    int n = g.num_vertices();
    // each pair of leaves with the same certificate gives an automorphism
    std::set<std::vector<int>> elems;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    elems.insert(id);
    const auto& base = leaves.front();
    for (size_t i = 1; i < leaves.size(); ++i) {
        std::vector<int> perm(n);
        for (int j = 0; j < n; ++j) perm[base[j]] = leaves[i][j];
        elems.insert(perm);
    }
    std::vector<std::vector<int>> gens(elems.begin(), elems.end());
    // close under composition (desk scale)
    std::set<std::vector<int>> group = elems;
    std::vector<std::vector<int>> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (auto& a : frontier)
            for (auto& b : gens) {
                std::vector<int> ab(n);
                for (int j = 0; j < n; ++j) ab[j] = a[b[j]];
                if (group.insert(ab).second) next.push_back(ab);
            }
        frontier = std::move(next);
        if (group.size() > 2000000) throw std::runtime_error("aut_group: closure too large");
    }
    for (auto& p : group)
        if (!(p == id)) out.generators.push_back(p);
    out.vertex_order = (long long)group.size();
    out.order = out.vertex_order * edge_symmetry_factor(g);
    return out;
}

// ---------------------------------------------------------------------------
// Structural automorphism order of a coarse class: an iterated wreath product
// over the branch forest, times the decoration-preserving dihedral symmetries
// of a cycle core. Exact at any scale.
// ---------------------------------------------------------------------------

namespace canon_detail {

inline long long factorial_ll(int m) {
    long long r = 1;
    for (int i = 2; i <= m; ++i) r *= i;
    return r;
}

inline long long branch_aut(const CBranch& b) {
    long long ord = 1;
    std::map<std::string, int> tail_counts;
    for (auto& t : b.tails) ++tail_counts[detail::tail_str(t)];
    for (auto& [k, m] : tail_counts) ord *= factorial_ll(m);
    std::map<std::string, std::pair<int, long long>> child_counts;
    for (auto& c : b.children) {
        auto& e = child_counts[detail::branch_str(c)];
        ++e.first;
        e.second = branch_aut(c);
    }
    for (auto& [k, cm] : child_counts) {
        ord *= factorial_ll(cm.first);
        for (int i = 0; i < cm.first; ++i) ord *= cm.second;
    }
    return ord;
}

inline long long core_vertex_aut(const CCore& c) {
    long long ord = 1;
    std::map<std::string, int> tail_counts;
    for (auto& t : c.tails) ++tail_counts[detail::tail_str(t)];
    for (auto& [k, m] : tail_counts) ord *= factorial_ll(m);
    std::map<std::string, std::pair<int, long long>> bc;
    for (auto& b : c.branches) {
        auto& e = bc[detail::branch_str(b)];
        ++e.first;
        e.second = branch_aut(b);
    }
    for (auto& [k, cm] : bc) {
        ord *= factorial_ll(cm.first);
        for (int i = 0; i < cm.first; ++i) ord *= cm.second;
    }
    return ord;
}

}  // namespace canon_detail

// dihedral elements of a cycle core that preserve the decorated vertex
// sequence; (shift, reflect) with reflect meaning i -> -i before shifting
struct DihedralElement {
    int shift = 0;
    bool reflect = false;
    bool orientation_reversing = false;  // acts by -1 on the cycle torus class
};

inline std::vector<DihedralElement> cycle_symmetries(const CoarseClass& cc) {
    std::vector<DihedralElement> out;
    if (!cc.cycle_core) return out;
    int k = (int)cc.core.size();
    std::vector<std::string> s(k);
    for (int i = 0; i < k; ++i) s[i] = detail::core_vertex_str(cc.core[i]);
    for (int refl = 0; refl < 2; ++refl)
        for (int shift = 0; shift < k; ++shift) {
            bool ok = true;
            for (int i = 0; i < k && ok; ++i) {
                int j = refl ? ((shift - i) % k + k) % k : (i + shift) % k;
                if (s[i] != s[j]) ok = false;
            }
            if (ok) out.push_back({shift, refl == 1, refl == 1});
        }
    return out;
}

inline long long aut_order_coarse(const CoarseClass& cc0) {
    CoarseClass cc = cc0;
    sort_coarse(cc);
    long long ord = 1;
    for (auto& c : cc.core) ord *= canon_detail::core_vertex_aut(c);
    // for k <= 2 the reflections act on parallel edges / loop half-edges, so
    // cycle_symmetries already realizes the full dihedral count 2k
    if (cc.cycle_core) ord *= (long long)cycle_symmetries(cc).size();
    return ord;
}

}  // namespace vzc
