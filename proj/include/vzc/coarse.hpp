#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vzc/graphs.hpp"

namespace vzc {

// ---------------------------------------------------------------------------
// Coarse classes of centrally aligned (1,n,d)-graphs: every rational tail is
// contracted to a single vertex. The shape is always a core (one genus-one
// vertex or a cycle) with a forest of support vertices and tail vertices
// hanging off it, so we store it as a decorated rooted forest and
// canonicalize structurally.
// ---------------------------------------------------------------------------

struct CTail {
    int delta = 0;
    std::vector<int> marks;  // sorted mark labels; delta >= 1 or |marks| >= 2
};

struct CBranch {
    // a support vertex: level in {1..depth}; degree > 0 only at level == depth
    int level = 1;
    int delta = 0;
    std::vector<int> marks;
    std::vector<CTail> tails;
    std::vector<CBranch> children;

    bool is_radius(int depth) const { return level == depth; }
};

struct CCore {
    // one core vertex (the unique vertex for a genus-one core, or one cycle
    // position for a cycle core)
    int delta = 0;
    std::vector<int> marks;
    std::vector<CTail> tails;
    std::vector<CBranch> branches;
};

enum class StratumKind {
    Interior,
    PositiveGenusOneCore,
    PositiveCycleCore,
    AlignedGenusOneCore,
    AlignedCycleCore,
};

inline const char* kind_name(StratumKind k) {
    switch (k) {
        case StratumKind::Interior: return "interior";
        case StratumKind::PositiveGenusOneCore: return "positive-genus1-core";
        case StratumKind::PositiveCycleCore: return "positive-cycle-core";
        case StratumKind::AlignedGenusOneCore: return "aligned-genus1-core";
        case StratumKind::AlignedCycleCore: return "aligned-cycle-core";
    }
    return "?";
}

struct CoarseClass {
    bool cycle_core = false;
    int depth = 0;  // 0 = unaligned (positive-degree core)
    std::vector<CCore> core;  // size 1 for genus-one cores, k for k-cycles
    int n = 0, d = 0;

    int cycle_length() const { return cycle_core ? (int)core.size() : 0; }

    StratumKind kind() const {
        if (depth == 0) {
            if (cycle_core) return StratumKind::PositiveCycleCore;
            bool boundary = false;
            for (auto& c : core)
                if (!c.tails.empty()) boundary = true;
            return boundary ? StratumKind::PositiveGenusOneCore : StratumKind::Interior;
        }
        return cycle_core ? StratumKind::AlignedCycleCore : StratumKind::AlignedGenusOneCore;
    }

    int num_tails() const {
        int t = 0;
        auto walk = [&](auto&& self, const CBranch& b) -> void {
            t += (int)b.tails.size();
            for (auto& c : b.children) self(self, c);
        };
        for (auto& c : core) {
            t += (int)c.tails.size();
            for (auto& b : c.branches) walk(walk, b);
        }
        return t;
    }

    // codim = core-internal edges + alignment depth + tail attaching edges
    int codim() const {
        int core_edges = cycle_core ? (int)core.size() : 0;
        return core_edges + depth + num_tails();
    }

    template <typename F>
    void for_each_branch(F&& f) const {
        auto walk = [&](auto&& self, const CBranch& b) -> void {
            f(b);
            for (auto& c : b.children) self(self, c);
        };
        for (auto& c : core)
            for (auto& b : c.branches) walk(walk, b);
    }
};

// ---------------------------------------------------------------------------
// Structural canonical form. For genus-one cores this is the classic
// sorted-subtree form of a rooted decorated tree; for cycle cores the cycle
// sequence is minimized over rotations and reflections. Markings are
// labelled, so mark sets enter the form literally. The resulting string is
// the stable cache key.
// ---------------------------------------------------------------------------

namespace detail {

inline std::string marks_str(const std::vector<int>& marks) {
    std::string s = "{";
    for (size_t i = 0; i < marks.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(marks[i]);
    }
    s += "}";
    return s;
}

inline std::string tail_str(const CTail& t) {
    return "T(" + std::to_string(t.delta) + marks_str(t.marks) + ")";
}

// sorts the subtree in place and returns its canonical string (built once
// per node, bottom up)
inline std::string branch_canon(CBranch& b) {
    std::vector<std::string> child_keys;
    for (auto& c : b.children) child_keys.push_back(branch_canon(c));
    std::vector<int> order(b.children.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(),
              [&](int x, int y) { return child_keys[x] < child_keys[y]; });
    std::vector<CBranch> nc;
    std::vector<std::string> nk;
    for (int i : order) {
        nc.push_back(std::move(b.children[i]));
        nk.push_back(std::move(child_keys[i]));
    }
    b.children = std::move(nc);
    std::sort(b.tails.begin(), b.tails.end(), [](const CTail& a, const CTail& b2) {
        return std::tie(a.delta, a.marks) < std::tie(b2.delta, b2.marks);
    });
    std::string s = "B(l" + std::to_string(b.level) + ",d" + std::to_string(b.delta) +
                    marks_str(b.marks) + "[";
    for (auto& t : b.tails) s += tail_str(t) + ";";
    for (auto& k : nk) s += k + ";";
    s += "])";
    return s;
}

inline std::string core_vertex_canon(CCore& c) {
    std::vector<std::string> keys;
    for (auto& b : c.branches) keys.push_back(branch_canon(b));
    std::vector<int> order(c.branches.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = (int)i;
    std::sort(order.begin(), order.end(), [&](int x, int y) { return keys[x] < keys[y]; });
    std::vector<CBranch> nb;
    std::vector<std::string> nk;
    for (int i : order) {
        nb.push_back(std::move(c.branches[i]));
        nk.push_back(std::move(keys[i]));
    }
    c.branches = std::move(nb);
    std::sort(c.tails.begin(), c.tails.end(), [](const CTail& a, const CTail& b2) {
        return std::tie(a.delta, a.marks) < std::tie(b2.delta, b2.marks);
    });
    std::string s = "C(d" + std::to_string(c.delta) + marks_str(c.marks) + "[";
    for (auto& t : c.tails) s += tail_str(t) + ";";
    for (auto& k : nk) s += k + ";";
    s += "])";
    return s;
}

// read-only key builders (no copies, no mutation)
inline std::string branch_str(const CBranch& b) {
    std::vector<std::string> parts;
    parts.reserve(b.children.size());
    for (auto& c : b.children) parts.push_back(branch_str(c));
    std::sort(parts.begin(), parts.end());
    std::vector<std::string> tparts;
    tparts.reserve(b.tails.size());
    for (auto& t : b.tails) tparts.push_back(tail_str(t));
    std::sort(tparts.begin(), tparts.end());
    std::string s;
    s.reserve(32 + 24 * (parts.size() + tparts.size()));
    s += "B(l";
    s += std::to_string(b.level);
    s += ",d";
    s += std::to_string(b.delta);
    s += marks_str(b.marks);
    s += "[";
    for (auto& t : tparts) {
        s += t;
        s += ";";
    }
    for (auto& k : parts) {
        s += k;
        s += ";";
    }
    s += "])";
    return s;
}

inline std::string core_vertex_str(const CCore& c) {
    std::vector<std::string> parts;
    parts.reserve(c.branches.size());
    for (auto& b : c.branches) parts.push_back(branch_str(b));
    std::sort(parts.begin(), parts.end());
    std::vector<std::string> tparts;
    tparts.reserve(c.tails.size());
    for (auto& t : c.tails) tparts.push_back(tail_str(t));
    std::sort(tparts.begin(), tparts.end());
    std::string s;
    s.reserve(32 + 24 * (parts.size() + tparts.size()));
    s += "C(d";
    s += std::to_string(c.delta);
    s += marks_str(c.marks);
    s += "[";
    for (auto& t : tparts) {
        s += t;
        s += ";";
    }
    for (auto& k : parts) {
        s += k;
        s += ";";
    }
    s += "])";
    return s;
}

}  // namespace detail

inline void sort_coarse(CoarseClass& cc) {
    std::vector<std::string> keys;
    for (auto& c : cc.core) keys.push_back(detail::core_vertex_canon(c));
    if (cc.cycle_core && cc.core.size() > 1) {
        int k = (int)cc.core.size();
        int best_refl = 0, best_rot = 0;
        std::string best_key;
        for (int refl = 0; refl < 2; ++refl)
            for (int rot = 0; rot < k; ++rot) {
                std::string ck;
                for (int i = 0; i < k; ++i) {
                    int j = refl ? ((rot - i) % k + k) % k : (i + rot) % k;
                    ck += keys[j] + "|";
                }
                if (best_key.empty() || ck < best_key) {
                    best_key = ck;
                    best_refl = refl;
                    best_rot = rot;
                }
            }
        std::vector<CCore> seq(k);
        for (int i = 0; i < k; ++i) {
            int j = best_refl ? ((best_rot - i) % k + k) % k : (i + best_rot) % k;
            seq[i] = std::move(cc.core[j]);
        }
        cc.core = std::move(seq);
    }
}

inline std::string canonical_string(const CoarseClass& cc) {
    std::vector<std::string> keys;
    keys.reserve(cc.core.size());
    for (auto& c : cc.core) keys.push_back(detail::core_vertex_str(c));
    int k = (int)keys.size();
    std::string body;
    if (cc.cycle_core && k > 1) {
        for (int refl = 0; refl < 2; ++refl)
            for (int rot = 0; rot < k; ++rot) {
                std::string ck;
                for (int i = 0; i < k; ++i) {
                    int j = refl ? ((rot - i) % k + k) % k : (i + rot) % k;
                    ck += keys[j];
                    ck += "|";
                }
                if (body.empty() || ck < body) body = std::move(ck);
            }
    } else {
        for (auto& key : keys) {
            body += key;
            body += "|";
        }
    }
    std::string s;
    s.reserve(body.size() + 32);
    s += cc.cycle_core ? "cyc" : "g1";
    s += std::to_string(cc.core.size());
    s += ":rho";
    s += std::to_string(cc.depth);
    s += ":n";
    s += std::to_string(cc.n);
    s += ":d";
    s += std::to_string(cc.d);
    s += ":";
    s += body;
    return s;
}

// ---------------------------------------------------------------------------
// Validity: stability of every degree-zero vertex, alignment conditions on
// levels, degree accounting.
// ---------------------------------------------------------------------------

struct CoarseCheck {
    bool ok = true;
    std::string why;
    void fail(const std::string& w) {
        if (ok) why = w;
        ok = false;
    }
};

inline CoarseCheck check_coarse(const CoarseClass& cc) {
    CoarseCheck r;
    int total = 0;
    std::set<int> marks_seen;
    auto take_marks = [&](const std::vector<int>& ms) {
        for (int m : ms) {
            if (m < 1 || m > cc.n || marks_seen.count(m)) r.fail("bad mark labels");
            marks_seen.insert(m);
        }
    };
    auto check_tail = [&](const CTail& t) {
        total += t.delta;
        take_marks(t.marks);
        if (t.delta == 0 && (int)t.marks.size() < 2) r.fail("unstable tail");
        if (t.delta < 0) r.fail("negative tail degree");
    };
    int top_sum = 0;
    auto check_branch = [&](auto&& self, const CBranch& b, int parent_level) -> void {
        if (b.level <= parent_level || b.level > cc.depth) r.fail("levels must strictly increase");
        total += b.delta;
        take_marks(b.marks);
        if (b.delta > 0 && b.level != cc.depth) r.fail("positive degree below the top level");
        if (b.level == cc.depth) {
            top_sum += b.delta;
            if (!b.children.empty()) r.fail("top-level vertex with support children");
        }
        // stability of a degree-zero genus-zero vertex: parent edge + stuff >= 3
        if (b.delta == 0) {
            int special = 1 + (int)b.marks.size() + (int)b.tails.size() + (int)b.children.size();
            if (special < 3) r.fail("unstable support vertex");
        }
        for (auto& t : b.tails) check_tail(t);
        for (auto& c : b.children) self(self, c, b.level);
    };
    for (auto& c : cc.core) {
        total += c.delta;
        take_marks(c.marks);
        for (auto& t : c.tails) check_tail(t);
        for (auto& b : c.branches) check_branch(check_branch, b, 0);
        if (c.delta < 0) r.fail("negative degree");
    }
    if ((int)marks_seen.size() != cc.n) r.fail("marks not total");
    if (total != cc.d) r.fail("degrees do not sum to d");

    if (cc.depth > 0) {
        for (auto& c : cc.core)
            if (c.delta != 0) r.fail("aligned class with positive-degree core");
        if (top_sum <= 1) r.fail("top-level degrees sum to <= 1");
        std::vector<char> level_used(cc.depth + 1, 0);
        cc.for_each_branch([&](const CBranch& b) { level_used[b.level] = 1; });
        for (int l = 1; l <= cc.depth; ++l)
            if (!level_used[l]) r.fail("empty level");
        // a positive-degree component cannot sit inside the contracted part:
        // positive tails attach on the contraction radius only
        for (auto& c : cc.core)
            for (auto& t : c.tails)
                if (t.delta >= 1) r.fail("positive tail below the contraction radius");
        cc.for_each_branch([&](const CBranch& b) {
            if (b.level == cc.depth) return;
            for (auto& t : b.tails)
                if (t.delta >= 1) r.fail("positive tail below the contraction radius");
        });
    } else {
        int core_deg = 0;
        for (auto& c : cc.core) core_deg += c.delta;
        if (core_deg == 0 && cc.d > 0) r.fail("zero-degree core without alignment");
    }
    // stability on the core
    if (!cc.cycle_core) {
        auto& c = cc.core[0];
        if (c.delta == 0) {
            int special = (int)c.marks.size() + (int)c.tails.size() + (int)c.branches.size();
            if (special < 1) r.fail("unstable genus-one vertex");
        }
    } else {
        for (auto& c : cc.core) {
            if (c.delta == 0) {
                int loops = cc.core.size() == 1 ? 2 : 2;  // cycle valence is always 2
                int special = loops + (int)c.marks.size() + (int)c.tails.size() +
                              (int)c.branches.size();
                if (special - 2 < 1) r.fail("unstable cycle vertex");
            }
        }
    }
    return r;
}

// Emptiness of the corresponding stratum:
//   (i) a genus-one core of degree exactly 1 (no smooth degree-one covers),
//  (ii) a factorisation factor whose reduced degree vector is a single 1
//       (cannot satisfy the derivative condition),
// plus invalid alignments, which check_coarse already rejects.
inline bool stratum_empty(const CoarseClass& cc) {
    if (!cc.cycle_core && cc.depth == 0 && cc.core[0].delta == 1) return true;
    if (cc.depth > 0) {
        std::vector<int> radius;
        cc.for_each_branch([&](const CBranch& b) {
            if (b.level == cc.depth && b.delta >= 1) radius.push_back(b.delta);
        });
        if (radius.size() == 1 && radius[0] == 1) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Dimension bookkeeping. ambient = n + d(r+1) for d >= 1; for d = 0 the
// target space is the product of the curve moduli with projective space.
// ---------------------------------------------------------------------------

inline int ambient_dim(int n, int r, int d) { return d >= 1 ? n + d * (r + 1) : n + r; }

struct FactorDims {
    // per-factor dimensions for the dimension cross-check
    std::vector<std::pair<std::string, int>> factors;
    int total() const {
        int t = 0;
        for (auto& [k, v] : factors) t += v;
        return t;
    }
};

// legs of a core vertex = marks + edges to branches and tails (+ cycle edges
// are not legs)
inline int core_legs(const CCore& c) {
    return (int)c.marks.size() + (int)c.tails.size() + (int)c.branches.size();
}

inline FactorDims stratum_factor_dims(const CoarseClass& cc, int r) {
    FactorDims fd;
    auto tail_dim = [&](const CTail& t) {
        // evaluation fibre of genus-zero stable maps
        return t.delta * (r + 1) + (int)t.marks.size() - 2;
    };
    // tails everywhere
    int tails_total = 0;
    auto add_tails = [&](const std::vector<CTail>& ts) {
        for (auto& t : ts) tails_total += tail_dim(t);
    };
    for (auto& c : cc.core) add_tails(c.tails);
    cc.for_each_branch([&](const CBranch& b) { add_tails(b.tails); });

    if (cc.depth == 0) {
        if (!cc.cycle_core) {
            auto& c = cc.core[0];
            if (cc.d >= 1 || c.delta >= 1)
                fd.factors.push_back({"maps-from-elliptic", core_legs(c) + c.delta * (r + 1)});
            else
                fd.factors.push_back({"curves-times-projective", core_legs(c) + r});
        } else {
            int legs = 0, core_deg = 0;
            for (auto& c : cc.core) {
                legs += core_legs(c);
                core_deg += c.delta;
            }
            int k = (int)cc.core.size();
            if (core_deg >= 1)
                fd.factors.push_back({"maps-from-cycle", legs - k + core_deg * (r + 1)});
            else
                fd.factors.push_back({"cycle-curves-times-projective", legs - k + r});
        }
    } else {
        fd.factors.push_back({"projective-target", r});
        // contraction-core curve stratum: core component(s) + intermediates
        int curve_dim = 0;
        if (!cc.cycle_core) {
            curve_dim += core_legs(cc.core[0]);
        } else {
            for (auto& c : cc.core) curve_dim += core_legs(c) - 1;
        }
        int interm = 0;
        int radius_count = 0;
        int mf_dim = 0;
        cc.for_each_branch([&](const CBranch& b) {
            if (b.level == cc.depth) {
                ++radius_count;
                int m = (int)b.marks.size() + (int)b.tails.size();
                mf_dim += b.delta * (r + 1) + m - 2;
            } else {
                ++interm;
                int special = 1 + (int)b.marks.size() + (int)b.tails.size() + (int)b.children.size();
                curve_dim += special - 3;
            }
        });
        int torus = interm - (cc.depth - 1);
        fd.factors.push_back({"aligned-curve-stratum", curve_dim});
        fd.factors.push_back({"level-torus", torus});
        fd.factors.push_back({"factorisation-space", mf_dim + (radius_count - 1) - r});
    }
    fd.factors.push_back({"tails", tails_total});
    return fd;
}

// ---------------------------------------------------------------------------
// StratumKey: one enumerated class with its cached codimension and dimension.
// ---------------------------------------------------------------------------

struct StratumKey {
    CoarseClass cls;
    std::string canon;
    StratumKind kind = StratumKind::Interior;
    int codim = 0;
    int dim = 0;

    static StratumKey make(CoarseClass cc, int r) {
        StratumKey k;
        k.canon = canonical_string(cc);
        k.kind = cc.kind();
        k.codim = cc.codim();
        k.dim = ambient_dim(cc.n, r, cc.d) - k.codim;
        k.cls = std::move(cc);
        return k;
    }
};

inline bool dimension_crosscheck(const StratumKey& key, int r, std::string* detail = nullptr) {
    FactorDims fd = stratum_factor_dims(key.cls, r);
    bool ok = fd.total() == key.dim;
    if (!ok && detail) {
        std::ostringstream os;
        os << "factors:";
        for (auto& [name, v] : fd.factors) os << " " << name << "=" << v;
        os << " total=" << fd.total() << " expected=" << key.dim;
        *detail = os.str();
    }
    return ok;
}

// ---------------------------------------------------------------------------
// Conversion to a plain dual graph (with the alignment), used by the
// graph-level operations and the cross-validation tests.
// ---------------------------------------------------------------------------

struct ExpandedGraph {
    DualGraph graph;
    std::optional<CentralAlignment> alignment;
};

inline ExpandedGraph to_dual_graph(const CoarseClass& cc) {
    ExpandedGraph out;
    DualGraph& g = out.graph;
    g.ambient_n = cc.n;
    g.ambient_d = cc.d;
    g.markings.assign(cc.n, -1);
    CentralAlignment al;
    al.depth = cc.depth;

    auto add_vertex = [&](int genus, int delta, const std::vector<int>& marks) {
        int idx = (int)g.vertices.size();
        g.vertices.push_back({genus, delta});
        for (int m : marks) g.markings[m - 1] = idx;
        return idx;
    };
    auto add_tails = [&](int at, const std::vector<CTail>& ts) {
        for (auto& t : ts) {
            int tv = add_vertex(0, t.delta, t.marks);
            g.edges.push_back({at, tv});
        }
    };
    auto add_branch = [&](auto&& self, int parent, const CBranch& b) -> void {
        int v = add_vertex(0, b.delta, b.marks);
        g.edges.push_back({parent, v});
        if (cc.depth > 0) {
            al.support.push_back(v);
            al.level[v] = b.level;
        }
        add_tails(v, b.tails);
        for (auto& c : b.children) self(self, v, c);
    };

    std::vector<int> core_idx;
    for (auto& c : cc.core)
        core_idx.push_back(add_vertex(cc.cycle_core ? 0 : 1, c.delta, c.marks));
    if (cc.cycle_core) {
        int k = (int)core_idx.size();
        if (k == 1)
            g.edges.push_back({core_idx[0], core_idx[0]});
        else
            for (int i = 0; i < k; ++i) g.edges.push_back({core_idx[i], core_idx[(i + 1) % k]});
    }
    for (size_t i = 0; i < cc.core.size(); ++i) {
        if (cc.depth > 0) {
            al.support.push_back(core_idx[i]);
            al.level[core_idx[i]] = 0;
        }
        add_tails(core_idx[i], cc.core[i].tails);
        for (auto& b : cc.core[i].branches) add_branch(add_branch, core_idx[i], b);
    }
    if (cc.depth > 0) out.alignment = std::move(al);
    return out;
}

// Coarse representative of an aligned graph (or of an unaligned graph with a
// positive-degree core): contract every rational tail to a single vertex.
inline CoarseClass coarse_representative(const DualGraph& g,
                                         const std::optional<CentralAlignment>& al) {
    std::vector<int> kept;
    std::map<int, int> level;
    int depth = 0;
    if (al) {
        kept = al->support;
        level = al->level;
        depth = al->depth;
    } else {
        kept = core(g);
        for (int v : kept) level[v] = 0;
    }
    std::set<int> keep(kept.begin(), kept.end());
    std::vector<int> cr = core(g);
    std::set<int> core_set(cr.begin(), cr.end());

    CoarseClass cc;
    cc.n = g.ambient_n;
    cc.d = g.ambient_d;
    cc.depth = depth;
    cc.cycle_core = g.vertices[cr[0]].genus == 0;

    std::vector<TailSummary> tails = rational_tails(g, kept);

    // assemble per-kept-vertex data
    std::map<int, std::vector<CTail>> tails_at;
    for (auto& t : tails) {
        CTail ct;
        ct.delta = t.degree;
        ct.marks = t.marks;
        tails_at[t.attach].push_back(ct);
    }
    // support forest structure
    VertexPoset poset = vertex_poset(g);
    std::map<int, std::vector<int>> children;
    for (int v : kept) {
        if (core_set.count(v)) continue;
        int p = poset.parent[v];
        children[p].push_back(v);
    }
    auto build_branch = [&](auto&& self, int v) -> CBranch {
        CBranch b;
        b.level = level.count(v) ? level[v] : 0;
        b.delta = g.vertices[v].degree;
        b.marks = g.mark_labels_at(v);
        std::sort(b.marks.begin(), b.marks.end());
        if (tails_at.count(v)) b.tails = tails_at[v];
        for (int c : children[v]) b.children.push_back(self(self, c));
        return b;
    };

    // cycle core ordering: walk the cycle
    std::vector<int> core_order;
    if (!cc.cycle_core || cr.size() == 1) {
        core_order = cr;
    } else {
        std::set<int> left(cr.begin(), cr.end());
        int cur = cr[0];
        core_order.push_back(cur);
        left.erase(cur);
        while (!left.empty()) {
            bool advanced = false;
            for (auto& [a, b] : g.edges) {
                int nxt = -1;
                if (a == cur && left.count(b)) nxt = b;
                if (b == cur && left.count(a)) nxt = a;
                if (nxt >= 0) {
                    core_order.push_back(nxt);
                    left.erase(nxt);
                    cur = nxt;
                    advanced = true;
                    break;
                }
            }
            if (!advanced) throw std::logic_error("coarse_representative: broken cycle");
        }
    }
    for (int v : core_order) {
        CCore c;
        c.delta = g.vertices[v].degree;
        c.marks = g.mark_labels_at(v);
        std::sort(c.marks.begin(), c.marks.end());
        if (tails_at.count(v)) c.tails = tails_at[v];
        for (int ch : children[v]) c.branches.push_back(build_branch(build_branch, ch));
        cc.core.push_back(std::move(c));
    }
    sort_coarse(cc);
    return cc;
}

}  // namespace vzc
