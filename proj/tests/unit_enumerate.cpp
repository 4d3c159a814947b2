#include <set>

#include "doctest.h"
#include "vzc/enumerate.hpp"

using namespace vzc;

namespace {

// Independent hand-enumeration oracle for codimension-one classes: the three
// divisor shapes are written out directly, one loop per shape.
std::set<std::string> divisor_oracle(int n, int d) {
    std::set<std::string> out;
    if (d == 1) return out;
    auto push = [&](CoarseClass cc) {
        cc.n = n;
        cc.d = d;
        if (!check_coarse(cc).ok || stratum_empty(cc)) return;
        if (cc.codim() != 1) return;
        out.insert(canonical_string(cc));
    };
    int nslots_max = d + 2;
    // mark assignments over s slots
    auto marks_rec = [&](int slots, auto&& use) {
        std::vector<int> assign(n, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == n) {
                use(assign);
                return;
            }
            for (int s = 0; s < slots; ++s) {
                assign[i] = s;
                rec(i + 1);
            }
        };
        rec(0);
    };

    // (a) genus-one core of degree d - t with one tail of degree t
    for (int t = 0; t + 2 <= d; ++t) {
        marks_rec(2, [&](const std::vector<int>& a) {
            CoarseClass cc;
            CCore c;
            c.delta = d - t;
            CTail tail;
            tail.delta = t;
            for (int i = 0; i < n; ++i)
                (a[i] == 0 ? c.marks : tail.marks).push_back(i + 1);
            c.tails = {tail};
            cc.core = {c};
            push(cc);
        });
    }
    // (b) the loop with full degree
    {
        CoarseClass cc;
        cc.cycle_core = true;
        CCore c;
        c.delta = d;
        for (int i = 0; i < n; ++i) c.marks.push_back(i + 1);
        cc.core = {c};
        push(cc);
    }
    // (c) depth-one alignments: radius degree multisets with optional zeros
    std::vector<int> part;
    std::function<void(int, int)> parts = [&](int left, int maxp) {
        if (left == 0) {
            for (int z = 0; z <= n / 2; ++z) {
                std::vector<int> radius = part;
                radius.insert(radius.end(), z, 0);
                int slots = 1 + (int)radius.size();  // core + radius vertices
                marks_rec(slots, [&](const std::vector<int>& a) {
                    CoarseClass cc;
                    cc.depth = 1;
                    CCore c;
                    std::vector<CBranch> br(radius.size());
                    for (size_t j = 0; j < radius.size(); ++j) {
                        br[j].level = 1;
                        br[j].delta = radius[j];
                    }
                    for (int i = 0; i < n; ++i) {
                        if (a[i] == 0)
                            c.marks.push_back(i + 1);
                        else
                            br[a[i] - 1].marks.push_back(i + 1);
                    }
                    c.branches = br;
                    cc.core = {c};
                    push(cc);
                });
            }
            return;
        }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            part.push_back(p);
            parts(left - p, p);
            part.pop_back();
        }
    };
    parts(d, d);
    (void)nslots_max;
    return out;
}

std::set<std::string> divisor_set(int n, int r, int d) {
    std::set<std::string> out;
    for (auto& k : boundary_divisors(n, r, d)) out.insert(k.canon);
    return out;
}

}  // namespace

TEST_CASE("interior-only enumeration") {
    auto keys = enumerate_coarse_classes(0, 2, 2, 0);
    REQUIRE(keys.size() == 1);
    CHECK(keys[0].kind == StratumKind::Interior);
    CHECK(keys[0].codim == 0);
    CHECK(keys[0].dim == 6);
}

TEST_CASE("codimension-one classes at n=0, d=2") {
    auto div = boundary_divisors(0, 2, 2);
    CHECK(div.size() == 3);
    int aligned = 0, loops = 0;
    for (auto& k : div) {
        if (k.kind == StratumKind::AlignedGenusOneCore) ++aligned;
        if (k.kind == StratumKind::PositiveCycleCore) ++loops;
    }
    CHECK(aligned == 2);  // radius (2) and radius (1,1)
    CHECK(loops == 1);    // the loop of degree 2
}

TEST_CASE("degree one gives the empty space") {
    CHECK(enumerate_coarse_classes(2, 2, 1, 3).empty());
}

TEST_CASE("divisors match the hand enumeration oracle") {
    for (int n = 0; n <= 2; ++n)
        for (int d = 2; d <= 3; ++d)
            for (int r : {2, 3}) {
                auto got = divisor_set(n, r, d);
                auto want = divisor_oracle(n, d);
                CHECK(got == want);
            }
    CHECK(divisor_set(0, 2, 2).size() == 3);
    CHECK(divisor_set(1, 2, 2).size() == 5);
    CHECK(divisor_set(2, 2, 2).size() == 13);
    CHECK(divisor_set(0, 2, 3).size() == 5);
    CHECK(divisor_set(1, 2, 3).size() == 10);
}

TEST_CASE("marking placements are enumerated at n=1, d=2") {
    auto div = boundary_divisors(1, 2, 2);
    CHECK(div.size() == 5);
    // mark on the core vs on the radius for the (2)-radius divisor
    int aligned_single = 0;
    for (auto& k : div)
        if (k.kind == StratumKind::AlignedGenusOneCore) ++aligned_single;
    CHECK(aligned_single == 4);
}

TEST_CASE("zero-degree boundary graphs at d=0") {
    // the target space degenerates to curves x projective space
    auto div = boundary_divisors(2, 2, 0);
    CHECK(div.size() == 2);  // irreducible nodal locus and the marked tail
}

TEST_CASE("dimension crosscheck across the sweep grid") {
    for (int n = 0; n <= 3; ++n)
        for (int r = 1; r <= 3; ++r)
            for (int d = 0; d <= 5; ++d) {
                auto keys = enumerate_coarse_classes(n, r, d, 2);
                for (auto& k : keys) {
                    std::string why;
                    bool ok = dimension_crosscheck(k, r, &why);
                    if (!ok) { CAPTURE(k.canon); CAPTURE(why); }
                    CHECK(ok);
                }
            }
}

TEST_CASE("enumeration is closed under radial merge and core contraction") {
    for (int n = 0; n <= 2; ++n)
        for (int d = 2; d <= 4; ++d) {
            int r = 2;
            auto keys = enumerate_coarse_classes(n, r, d, 3);
            std::set<std::string> have;
            for (auto& k : keys) have.insert(k.canon);
            for (auto& k : keys) {
                auto exp = to_dual_graph(k.cls);
                if (exp.alignment) {
                    for (int i = 1; i <= exp.alignment->depth; ++i) {
                        auto m = radial_merge(exp.graph, *exp.alignment, i);
                        CoarseClass img = coarse_representative(m.graph, m.alignment);
                        if (stratum_empty(img)) continue;
                        CAPTURE(k.canon);
                        CAPTURE(i);
                        CHECK(have.count(canonical_string(img)) == 1);
                    }
                } else if (k.cls.cycle_core) {
                    // contract one core edge of the expansion
                    auto cr = core(exp.graph);
                    std::set<int> core_set(cr.begin(), cr.end());
                    for (int e = 0; e < exp.graph.num_edges(); ++e) {
                        auto [a, b] = exp.graph.edges[e];
                        if (!core_set.count(a) || !core_set.count(b)) continue;
                        DualGraph h = contract_edge(exp.graph, e);
                        CoarseClass img = coarse_representative(h, std::nullopt);
                        if (stratum_empty(img)) continue;  // degree-one elliptic image
                        CAPTURE(k.canon);
                        CHECK(have.count(canonical_string(img)) == 1);
                        break;  // one edge is enough: the rest are symmetric
                    }
                }
            }
        }
}

TEST_CASE("counts invariant under global mark relabelling") {
    auto keys = enumerate_coarse_classes(3, 2, 2, 2);
    // swap marks 1 <-> 3 everywhere and re-canonicalize: the set is stable
    std::set<std::string> before, after;
    for (auto& k : keys) before.insert(k.canon);
    for (auto& k : keys) {
        CoarseClass cc = k.cls;
        auto swap_marks = [](std::vector<int>& ms) {
            for (int& m : ms) m = (m == 1 ? 3 : (m == 3 ? 1 : m));
            std::sort(ms.begin(), ms.end());
        };
        for (auto& c : cc.core) {
            swap_marks(c.marks);
            for (auto& t : c.tails) swap_marks(t.marks);
        }
        auto walk = [&](auto&& self, CBranch& b) -> void {
            swap_marks(b.marks);
            for (auto& t : b.tails) swap_marks(t.marks);
            for (auto& ch : b.children) self(self, ch);
        };
        for (auto& c : cc.core)
            for (auto& b : c.branches) walk(walk, b);
        after.insert(canonical_string(cc));
    }
    CHECK(before == after);
}

TEST_CASE("every enumerated class expands to a valid stable aligned graph") {
    for (int n = 0; n <= 2; ++n) {
        auto keys = enumerate_coarse_classes(n, 2, 3, 2);
        for (auto& k : keys) {
            auto exp = to_dual_graph(k.cls);
            CHECK(exp.graph.valid());
            CHECK(is_stable(exp.graph));
            if (exp.alignment) CHECK(validate_alignment(exp.graph, *exp.alignment).ok);
        }
    }
}
