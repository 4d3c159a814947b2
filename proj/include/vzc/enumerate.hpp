#pragma once

#include <functional>
#include <mutex>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "vzc/canon.hpp"
#include "vzc/coarse.hpp"

namespace vzc {

// ---------------------------------------------------------------------------
// Enumeration of all nonempty coarse classes of centrally aligned
// (1,n,d)-graphs up to isomorphism, with codimension <= max_codim.
//
// Generation order: core shape x degree distributions x support forests x
// tail placements x marking assignments, then canonical dedup. Symmetric
// duplication is cut by placing equal undecorated items at nondecreasing
// positions; later decoration passes run over all slots, so no class is
// missed.
//
// d = 1 is special: there are no degree-one maps from a smooth genus-one
// curve, so the whole space is empty and the enumeration returns nothing.
// ---------------------------------------------------------------------------

struct EnumerateOptions {
    int max_intermediates = 8;
};

class ClassSet {
public:
    void consider(CoarseClass cc, int max_codim) {
        if (cc.codim() > max_codim) return;
        if (!check_coarse(cc).ok) return;
        if (stratum_empty(cc)) return;
        std::string canon = canonical_string(cc);
        classes_.emplace(std::move(canon), std::move(cc));
    }
    std::vector<CoarseClass> sorted() const {
        std::vector<CoarseClass> out;
        for (auto& [c, k] : classes_) out.push_back(k);
        return out;
    }

private:
    std::map<std::string, CoarseClass> classes_;
};

namespace enum_detail {

// nondecreasing lists of tail degrees (>= 0) of given size and exact sum
inline void tail_degree_lists(int size, int sum, int min_entry, std::vector<int>& cur,
                              const std::function<void(const std::vector<int>&)>& emit) {
    if ((int)cur.size() == size) {
        if (sum == 0) emit(cur);
        return;
    }
    for (int d = min_entry; d <= sum; ++d) {
        cur.push_back(d);
        tail_degree_lists(size, sum - d, d, cur, emit);
        cur.pop_back();
    }
}

// partitions of total into parts >= 1 (nonincreasing)
inline void partitions(int total, int max_part, std::vector<int>& cur,
                       const std::function<void(const std::vector<int>&)>& emit) {
    if (total == 0) {
        emit(cur);
        return;
    }
    for (int p = std::min(total, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(total - p, p, cur, emit);
        cur.pop_back();
    }
}

// distribute items (equal items adjacent) over bins, equal items in
// nondecreasing bin order
template <typename Item>
void distribute(const std::vector<Item>& items, int bins, size_t idx, int prev_bin,
                std::vector<int>& assign,
                const std::function<void(const std::vector<int>&)>& emit) {
    if (idx == items.size()) {
        emit(assign);
        return;
    }
    int lo = (idx > 0 && items[idx] == items[idx - 1]) ? prev_bin : 0;
    for (int b = lo; b < bins; ++b) {
        assign[idx] = b;
        distribute(items, bins, idx + 1, b, assign, emit);
    }
}

// all mark slots of a class, in traversal order
inline std::vector<std::vector<int>*> mark_slots(CoarseClass& cc) {
    std::vector<std::vector<int>*> slots;
    auto walk = [&](auto&& self, CBranch& b) -> void {
        slots.push_back(&b.marks);
        for (auto& t : b.tails) slots.push_back(&t.marks);
        for (auto& c : b.children) self(self, c);
    };
    for (auto& c : cc.core) {
        slots.push_back(&c.marks);
        for (auto& t : c.tails) slots.push_back(&t.marks);
        for (auto& b : c.branches) walk(walk, b);
    }
    return slots;
}

// minimum number of marks still required to stabilize zero-degree slots
inline int currency_needed(const CoarseClass& cc) {
    int need = 0;
    cc.for_each_branch([&](const CBranch& b) {
        if (b.delta == 0) {
            int have = (int)b.tails.size() + (int)b.children.size();
            need += std::max(0, 2 - have);
        }
        for (auto& t : b.tails)
            if (t.delta == 0) need += 2;
    });
    for (auto& c : cc.core)
        for (auto& t : c.tails)
            if (t.delta == 0) need += 2;
    return need;
}

// Marks are placed one label at a time; placements whose partially marked
// classes are isomorphic lead to isomorphic completions, so only one slot per
// symmetry orbit is pursued.
inline void assign_marks(const CoarseClass& skeleton, int n, int max_codim, ClassSet& out) {
    if (currency_needed(skeleton) > n) return;
    CoarseClass cc = skeleton;
    auto slots = mark_slots(cc);  // push_back on mark vectors keeps pointers valid
    std::function<void(int)> rec = [&](int mark) {
        if (mark > n) {
            out.consider(cc, max_codim);
            return;
        }
        std::set<std::string> seen;
        for (auto* s : slots) {
            s->push_back(mark);
            if (seen.insert(canonical_string(cc)).second) rec(mark + 1);
            s->pop_back();
        }
    };
    rec(1);
}

struct VertexRef {
    std::vector<int> path;  // core index, then child indices
};

inline CBranch* branch_at(CoarseClass& cc, const VertexRef& ref) {
    if (ref.path.size() == 1) return nullptr;  // core vertex
    CBranch* b = &cc.core[ref.path[0]].branches[ref.path[1]];
    for (size_t i = 2; i < ref.path.size(); ++i) b = &b->children[ref.path[i]];
    return b;
}

inline void add_tail_at(CoarseClass& cc, const VertexRef& ref, const CTail& t) {
    if (CBranch* b = branch_at(cc, ref))
        b->tails.push_back(t);
    else
        cc.core[ref.path[0]].tails.push_back(t);
}

inline void add_branch_at(CoarseClass& cc, const VertexRef& ref, const CBranch& b) {
    if (CBranch* pb = branch_at(cc, ref))
        pb->children.push_back(b);
    else
        cc.core[ref.path[0]].branches.push_back(b);
}

inline std::vector<VertexRef> all_vertices(CoarseClass& cc) {
    std::vector<VertexRef> refs;
    auto walk = [&](auto&& self, CBranch& b, VertexRef ref) -> void {
        refs.push_back(ref);
        for (int i = 0; i < (int)b.children.size(); ++i) {
            VertexRef child = ref;
            child.path.push_back(i);
            self(self, b.children[i], child);
        }
    };
    for (int c = 0; c < (int)cc.core.size(); ++c) {
        refs.push_back({{c}});
        for (int i = 0; i < (int)cc.core[c].branches.size(); ++i)
            walk(walk, cc.core[c].branches[i], {{c, i}});
    }
    return refs;
}

// unmarked skeletons, deduplicated by canonical form before the marking pass
struct SkeletonSet {
    std::map<std::string, CoarseClass> skeletons;
    void add(const CoarseClass& cc) { skeletons.emplace(canonical_string(cc), cc); }
};

// scatter tails with given degrees over all vertices (appending tails never
// shifts existing vertex paths, so the reference list is computed once)
inline void place_tails(const CoarseClass& skeleton, const std::vector<int>& tail_degs,
                        SkeletonSet& out) {
    if (tail_degs.empty()) {
        out.add(skeleton);
        return;
    }
    CoarseClass base = skeleton;
    auto refs = all_vertices(base);
    std::vector<int> assign(tail_degs.size());
    distribute<int>(tail_degs, (int)refs.size(), 0, 0, assign, [&](const std::vector<int>& a) {
        CoarseClass cc = base;
        for (size_t i = 0; i < tail_degs.size(); ++i)
            add_tail_at(cc, refs[a[i]], CTail{tail_degs[i], {}});
        out.add(cc);
    });
}

// tails of every count whose degrees sum to tail_sum
inline void with_tails(const CoarseClass& skeleton, int tail_budget, int tail_sum, int n,
                       SkeletonSet& out) {
    if (currency_needed(skeleton) > n + tail_budget) return;
    for (int t = (tail_sum > 0 ? 1 : 0); t <= tail_budget; ++t) {
        std::vector<int> cur;
        tail_degree_lists(t, tail_sum, 0, cur, [&](const std::vector<int>& degs) {
            place_tails(skeleton, degs, out);
        });
    }
}

// Grow the support forest of an aligned skeleton by placing all support
// vertices in one pass: intermediates level by level, then radius vertices.
// Item i may attach to the core or to any earlier item at a smaller level.
// Subtrees are abandoned as soon as the stability deficit (intermediates
// still missing children, zero-degree radius vertices needing marks or
// tails) cannot be met by the remaining placements plus the mark/tail
// budget.
inline void build_aligned(int n, int d, int max_codim, int cyclek, int depth,
                          const std::vector<int>& radius_degs, const std::vector<int>& per_level,
                          int tail_sum, SkeletonSet& out) {
    int ncore = cyclek == 0 ? 1 : cyclek;
    struct Item {
        int level;
        int delta;
    };
    std::vector<Item> items;
    for (int l = 1; l < depth; ++l)
        for (int i = 0; i < per_level[l - 1]; ++i) items.push_back({l, 0});
    std::vector<int> sorted_radius = radius_degs;
    std::sort(sorted_radius.begin(), sorted_radius.end());
    int zero_radius = 0;
    for (int x : sorted_radius)
        if (x == 0) ++zero_radius;
    for (int x : sorted_radius) items.push_back({depth, x});
    int m = (int)items.size();
    int budget = n + (max_codim - cyclek - depth);  // marks + possible tails

    std::vector<int> parent(m, -1);   // < ncore: core vertex; >= ncore: item index - ncore
    std::vector<int> deficit(m, 0);   // children still needed by item i (intermediates)
    int deficit_sum = 0;

    std::function<void(int)> place = [&](int idx) {
        if (idx == m) {
            if (2 * zero_radius + deficit_sum > budget) return;
            CoarseClass cc;
            cc.n = n;
            cc.d = d;
            cc.depth = depth;
            cc.cycle_core = cyclek > 0;
            cc.core.resize(ncore);
            // item index -> path of the built branch
            std::vector<VertexRef> where(m);
            for (int i = 0; i < m; ++i) {
                CBranch b;
                b.level = items[i].level;
                b.delta = items[i].delta;
                if (parent[i] < ncore) {
                    cc.core[parent[i]].branches.push_back(b);
                    where[i] = {{parent[i], (int)cc.core[parent[i]].branches.size() - 1}};
                } else {
                    VertexRef p = where[parent[i] - ncore];
                    CBranch* pb = branch_at(cc, p);
                    pb->children.push_back(b);
                    p.path.push_back((int)pb->children.size() - 1);
                    where[i] = p;
                }
            }
            with_tails(cc, max_codim - cc.codim(), tail_sum, n, out);
            return;
        }
        // prune: remaining placements can each absorb at most one deficit unit
        int remaining = m - idx;
        if (2 * zero_radius + std::max(0, deficit_sum - remaining) > budget) return;
        int lo = 0;
        if (idx > 0 && items[idx].level == items[idx - 1].level &&
            items[idx].delta == items[idx - 1].delta)
            lo = parent[idx - 1];
        for (int p = lo; p < ncore + idx; ++p) {
            if (p >= ncore) {
                int j = p - ncore;
                if (items[j].level >= items[idx].level) continue;
            }
            parent[idx] = p;
            int had = 0;
            if (p >= ncore) {
                int j = p - ncore;
                had = deficit[j];
                if (deficit[j] > 0) {
                    --deficit[j];
                    --deficit_sum;
                }
            }
            bool interm = items[idx].level < depth;
            if (interm) {
                deficit[idx] = 2;
                deficit_sum += 2;
            }
            place(idx + 1);
            if (interm) {
                deficit[idx] = 0;
                deficit_sum -= 2;
            }
            if (p >= ncore) {
                int j = p - ncore;
                if (had > 0) {
                    ++deficit[j];
                    ++deficit_sum;
                }
            }
            parent[idx] = -1;
        }
    };
    place(0);
}

}  // namespace enum_detail

// classes are independent of the target dimension r, so the heavy search is
// memoized on (n, d, max_codim)
inline std::vector<CoarseClass> enumerate_classes_raw(int n, int d, int max_codim,
                                                      EnumerateOptions opt = {}) {
    using namespace enum_detail;
    ClassSet out;
    if (d == 1) return out.sorted();  // no smooth genus-one maps of degree one
    SkeletonSet skels;

    // --- unaligned genus-one core (includes the interior) -------------------
    for (int tail_sum = 0; tail_sum <= d; ++tail_sum) {
        int core_deg = d - tail_sum;
        if (!(core_deg >= 2 || (d == 0 && core_deg == 0))) continue;
        CoarseClass skel;
        skel.n = n;
        skel.d = d;
        skel.core.resize(1);
        skel.core[0].delta = core_deg;
        with_tails(skel, max_codim, tail_sum, n, skels);
    }

    // --- unaligned cycle core ------------------------------------------------
    for (int k = 1; k <= max_codim; ++k) {
        for (int tail_sum = 0; tail_sum <= d - 1 || (d == 0 && tail_sum == 0); ++tail_sum) {
            int cyc_deg = d - tail_sum;
            if (!(cyc_deg >= 1 || d == 0)) continue;
            std::vector<int> degs(k, 0);
            std::function<void(int, int)> rec = [&](int i, int left) {
                if (i == k) {
                    if (left != 0) return;
                    CoarseClass skel;
                    skel.n = n;
                    skel.d = d;
                    skel.cycle_core = true;
                    skel.core.resize(k);
                    for (int j = 0; j < k; ++j) skel.core[j].delta = degs[j];
                    with_tails(skel, max_codim - k, tail_sum, n, skels);
                    return;
                }
                for (int v = 0; v <= left; ++v) {
                    degs[i] = v;
                    rec(i + 1, left - v);
                }
            };
            rec(0, cyc_deg);
        }
    }

    // --- aligned cores ---------------------------------------------------------
    for (int cyclek = 0; cyclek < max_codim; ++cyclek) {  // 0 = genus-one core
        for (int depth = 1; cyclek + depth <= max_codim; ++depth) {
            for (int tail_sum = 0; tail_sum <= d - 2; ++tail_sum) {
                int radius_sum = d - tail_sum;
                std::vector<int> part;
                partitions(radius_sum, radius_sum, part, [&](const std::vector<int>& pos) {
                    int tail_budget = max_codim - cyclek - depth;
                    int zmax = (n + tail_budget) / 2;  // zero-degree radius needs two decorations
                    for (int z = 0; z <= zmax; ++z) {
                        std::vector<int> radius = pos;
                        radius.insert(radius.end(), z, 0);
                        if (depth == 1) {
                            build_aligned(n, d, max_codim, cyclek, depth, radius, {}, tail_sum,
                                          skels);
                        } else {
                            // every intermediate needs two of children/marks/tails,
                            // which caps the worthwhile forest size
                            int cap = std::min(opt.max_intermediates,
                                               n + tail_budget + (int)radius.size() - 1);
                            std::vector<int> per_level(depth - 1, 1);
                            std::function<void(int, int)> lvlrec = [&](int li, int total) {
                                if (li == depth - 1) {
                                    build_aligned(n, d, max_codim, cyclek, depth, radius,
                                                  per_level, tail_sum, skels);
                                    return;
                                }
                                for (int m = 1; m + total <= cap; ++m) {
                                    per_level[li] = m;
                                    lvlrec(li + 1, total + m);
                                }
                            };
                            lvlrec(0, 0);
                        }
                    }
                });
            }
        }
    }

    for (auto& [key, skel] : skels.skeletons) assign_marks(skel, n, max_codim, out);
    return out.sorted();
}

inline std::vector<StratumKey> enumerate_coarse_classes(int n, int r, int d, int max_codim,
                                                        EnumerateOptions opt = {}) {
    static std::map<std::tuple<int, int, int>, std::vector<CoarseClass>> memo;
    static std::mutex memo_mutex;
    std::vector<CoarseClass>* classes = nullptr;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find({n, d, max_codim});
        if (it == memo.end()) {
            auto raw = enumerate_classes_raw(n, d, max_codim, opt);
            it = memo.emplace(std::make_tuple(n, d, max_codim), std::move(raw)).first;
        }
        classes = &it->second;
    }
    std::vector<StratumKey> out;
    out.reserve(classes->size());
    for (auto& cc : *classes) out.push_back(StratumKey::make(cc, r));
    return out;
}

inline std::vector<StratumKey> boundary_divisors(int n, int r, int d) {
    auto all = enumerate_coarse_classes(n, r, d, 1);
    std::vector<StratumKey> out;
    for (auto& k : all)
        if (k.codim == 1) out.push_back(k);
    return out;
}

inline int codimension(const CoarseClass& cc) { return cc.codim(); }

}  // namespace vzc
