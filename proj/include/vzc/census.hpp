#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "vzc/blocks.hpp"
#include "vzc/canon.hpp"
#include "vzc/enumerate.hpp"
#include "vzc/tails.hpp"

namespace vzc {

// ---------------------------------------------------------------------------
// Per-stratum pure-weight generator series with automorphism invariants.
//
// The automorphism group of a coarse class is an iterated wreath product over
// the branch forest, extended by the dihedral symmetries of a cycle core, so
// the invariant series is assembled from symmetric/exterior powers of branch
// series rather than by summing over group elements. Cusp classes on the
// core twist the branch permutations by their character (the sign character
// for the built-in entries), which turns symmetric powers into exterior
// powers.
// ---------------------------------------------------------------------------

struct CensusContext {
    const CuspTable* table;
    TailsOracle* tails;
    int r = 2;
};

namespace census_detail {

// one permutable slot hanging at a core vertex: either a support branch with
// everything below it, or a tail
struct Slot {
    std::string key;     // canonical content string (equal keys = permutable)
    HodgeSeries series;  // inner-invariant series of the slot
};

inline HodgeSeries tails_sym(const CensusContext& ctx, const std::vector<CTail>& tails,
                             int trunc) {
    std::map<std::string, std::pair<int, HodgeSeries>> groups;
    for (auto& t : tails) {
        auto& g = groups[detail::tail_str(t)];
        if (g.first == 0)
            g.second = ctx.tails->tails_poincare((int)t.marks.size(), t.delta, ctx.r)
                           .truncated(trunc);
        g.first += 1;
    }
    HodgeSeries out = HodgeSeries::unit();
    for (auto& [k, g] : groups) out = (out * sym_power(g.second, g.first, trunc)).truncated(trunc);
    return out;
}

// inner-invariant series of a support branch (everything strictly below the
// core); psi_gate says whether the radius psi powers are switched on
inline HodgeSeries branch_series(const CensusContext& ctx, const CBranch& b, int depth,
                                 bool psi_gate, int trunc) {
    HodgeSeries s = HodgeSeries::unit();
    if (b.level == depth && psi_gate) s = tate_powers(0, ctx.r - 1);
    s = (s * tails_sym(ctx, b.tails, trunc)).truncated(trunc);
    std::map<std::string, std::pair<int, HodgeSeries>> groups;
    for (auto& c : b.children) {
        auto& g = groups[detail::branch_str(c)];
        if (g.first == 0) g.second = branch_series(ctx, c, depth, psi_gate, trunc);
        g.first += 1;
    }
    for (auto& [k, g] : groups) s = (s * sym_power(g.second, g.first, trunc)).truncated(trunc);
    return s;
}

inline std::vector<Slot> core_slots(const CensusContext& ctx, const CCore& c, int depth,
                                    bool psi_gate, int trunc) {
    std::vector<Slot> slots;
    for (auto& t : c.tails) {
        Slot s;
        s.key = detail::tail_str(t);
        s.series =
            ctx.tails->tails_poincare((int)t.marks.size(), t.delta, ctx.r).truncated(trunc);
        slots.push_back(std::move(s));
    }
    for (auto& b : c.branches) {
        Slot s;
        s.key = detail::branch_str(b);
        s.series = branch_series(ctx, b, depth, psi_gate, trunc);
        slots.push_back(std::move(s));
    }
    return slots;
}

// invariants of the slot permutations twisted by a character of the induced
// permutation of the core legs (marks are fixed, so only slot moves count)
inline HodgeSeries twisted_slot_sym(const std::vector<Slot>& slots, CharacterTag tag,
                                    const CuspEntry* entry, int fixed_legs, int trunc) {
    std::map<std::string, std::pair<int, HodgeSeries>> groups;
    for (auto& s : slots) {
        auto& g = groups[s.key];
        if (g.first == 0) g.second = s.series;
        g.first += 1;
    }
    if (tag == CharacterTag::Trivial) {
        HodgeSeries out = HodgeSeries::unit();
        for (auto& [k, g] : groups)
            out = (out * sym_power(g.second, g.first, trunc)).truncated(trunc);
        return out;
    }
    if (tag == CharacterTag::Sign) {
        HodgeSeries out = HodgeSeries::unit();
        for (auto& [k, g] : groups)
            out = (out * ext_power(g.second, g.first, trunc)).truncated(trunc);
        return out;
    }
    // custom character: Burnside sum over cycle types of the slot groups
    std::vector<std::pair<int, HodgeSeries>> gs;
    for (auto& [k, g] : groups) gs.push_back(g);
    HodgeSeries total;
    std::function<void(size_t, Rational, std::vector<int>&, HodgeSeries)> rec =
        [&](size_t gi, Rational weight, std::vector<int>& cycles, HodgeSeries acc) {
            if (gi == gs.size()) {
                std::vector<int> type = cycles;
                for (int i = 0; i < fixed_legs; ++i) type.push_back(1);
                std::sort(type.rbegin(), type.rend());
                Rational chi(1);
                if (entry) {
                    auto it = entry->traces.find(type);
                    chi = it == entry->traces.end() ? Rational(0) : it->second;
                }
                total += acc.scaled(weight * chi).truncated(trunc);
                return;
            }
            int m = gs[gi].first;
            const HodgeSeries& v = gs[gi].second;
            // partitions of m with the 1/z_lambda weight
            std::vector<int> part;
            std::function<void(int, int)> parts = [&](int left, int maxp) {
                if (left == 0) {
                    Rational z(1);
                    std::map<int, int> mult;
                    for (int p : part) ++mult[p];
                    for (auto& [p, a] : mult) {
                        for (int i = 0; i < a; ++i) z = z * Rational(p);
                        for (int i = 2; i <= a; ++i) z = z * Rational(i);
                    }
                    HodgeSeries acc2 = acc;
                    for (int p : part) acc2 = (acc2 * v.power_substitute(p)).truncated(trunc);
                    for (int p : part) cycles.push_back(p);
                    rec(gi + 1, weight / z, cycles, acc2);
                    for (size_t i = 0; i < part.size(); ++i) cycles.pop_back();
                    return;
                }
                for (int p = std::min(left, maxp); p >= 1; --p) {
                    part.push_back(p);
                    parts(left - p, p);
                    part.pop_back();
                }
            };
            parts(m, m);
        };
    std::vector<int> cycles;
    rec(0, Rational(1), cycles, HodgeSeries::unit());
    return total;
}

// decoration-preserving dihedral average over a cycle core: vertex slots W_v
// are permuted by the symmetries; the trace of an orbit of length l is the
// power substitution of the representative series
inline HodgeSeries dihedral_average(const CoarseClass& cc, const std::vector<HodgeSeries>& w,
                                    int trunc) {
    auto syms = cycle_symmetries(cc);
    int k = (int)cc.core.size();
    HodgeSeries total;
    for (auto& g : syms) {
        auto image = [&](int i) {
            return g.reflect ? ((g.shift - i) % k + k) % k : (i + g.shift) % k;
        };
        std::vector<char> done(k, 0);
        HodgeSeries tr = HodgeSeries::unit();
        for (int i = 0; i < k; ++i) {
            if (done[i]) continue;
            int len = 0, x = i;
            do {
                done[x] = 1;
                x = image(x);
                ++len;
            } while (x != i);
            tr = (tr * w[i].power_substitute(len)).truncated(trunc);
        }
        total += tr;
    }
    return total.scaled(Rational(1, (long long)syms.size()));
}

}  // namespace census_detail

// one catalogued off-by-one class of a stratum, for the survival analysis
struct OffCatalogEntry {
    int degree = 0;        // cohomological degree on the stratum
    Monomial monomial;     // Hodge type (weight = degree + 1)
    std::string kind;      // torus / beta / m0n-h1 / basepoint / getzler / alpha-diff
    std::string detail;
};

struct StratumRecord {
    StratumKey key;
    HodgeSeries invariant_pure;
    HodgeSeries bm_pure;  // degree j holds the classes of BM degree j
    std::vector<OffCatalogEntry> off_catalog;
    bool psi_gate = false;
    std::string note;
};

inline int core_legs_total(const CoarseClass& cc) {
    int l = 0;
    for (auto& c : cc.core) l += core_legs(c);
    return l;
}

inline StratumRecord stratum_pure(const CensusContext& ctx, const StratumKey& key) {
    using namespace census_detail;
    const CuspTable& table = *ctx.table;
    StratumRecord rec;
    rec.key = key;
    CoarseClass cc = key.cls;
    sort_coarse(cc);
    int r = ctx.r;
    int trunc = 2 * key.dim;

    // the psi gate: every radius vertex univalent or bivalent
    bool gate = true;
    if (cc.depth > 0)
        cc.for_each_branch([&](const CBranch& b) {
            if (b.level == cc.depth && (int)b.marks.size() + (int)b.tails.size() > 1)
                gate = false;
        });
    rec.psi_gate = cc.depth > 0 && gate;
    if (cc.depth > 0)
        rec.note = "aligned stratum: per-vertex psi exponents 0..r-1 on univalent/bivalent "
                   "radius vertices (single shared psi under the stack reading)";

    HodgeSeries inv;
    if (!cc.cycle_core) {
        const CCore& c = cc.core[0];
        int l0 = core_legs(c);
        auto slots = core_slots(ctx, c, cc.depth, gate, trunc);
        if (cc.depth > 0) {
            // contracted genus-one core: pointed elliptic pure classes and
            // the projective factor of the common image point
            for (auto& a : m1n_pure_basis(table, l0)) {
                HodgeSeries head = a.is_one() ? HodgeSeries::unit()
                                              : HodgeSeries::term(a.k, Monomial::S(a.k), 1);
                CharacterTag tag = CharacterTag::Trivial;
                const CuspEntry* entry = nullptr;
                if (!a.is_one()) {
                    entry = &table.entry(l0, a.k);
                    tag = entry->character;
                }
                HodgeSeries sym = twisted_slot_sym(slots, tag, entry, (int)c.marks.size(), trunc);
                inv += (head * sym).truncated(trunc);
            }
            inv = (inv * tate_powers(0, r)).truncated(trunc);
        } else {
            // positive-degree or degree-zero unaligned genus-one core
            int d_core = c.delta;
            if (d_core == 1) throw std::logic_error("stratum_pure: empty stratum");
            struct PicSlot {
                int theta;
                int nval;
            };
            std::vector<PicSlot> pic_slots;
            if (cc.d == 0 || d_core == 0)
                pic_slots = {{0, l0}};
            else
                pic_slots = {{0, l0 + 1}, {1, l0}};
            for (auto& ps : pic_slots) {
                for (auto& a : m1n_pure_basis(table, ps.nval)) {
                    HodgeSeries head = a.is_one() ? HodgeSeries::unit()
                                                  : HodgeSeries::term(a.k, Monomial::S(a.k), 1);
                    if (ps.theta) head = head.tate_twist(1);
                    CharacterTag tag = CharacterTag::Trivial;
                    const CuspEntry* entry = nullptr;
                    if (!a.is_one()) {
                        entry = &table.entry(ps.nval, a.k);
                        tag = entry->character;
                    }
                    int fixed = (int)c.marks.size() + (ps.nval > l0 ? 1 : 0);
                    HodgeSeries sym = twisted_slot_sym(slots, tag, entry, fixed, trunc);
                    inv += (head * sym).truncated(trunc);
                }
            }
            inv = (inv * tate_powers(0, r)).truncated(trunc);
        }
    } else {
        // cycle cores: per-vertex slot series, dihedral average
        int k = (int)cc.core.size();
        std::vector<HodgeSeries> w(k);
        for (int i = 0; i < k; ++i) {
            const CCore& c = cc.core[i];
            HodgeSeries s = HodgeSeries::unit();
            if (cc.depth == 0) {
                // undecorated positive-degree cycle vertices carry psi classes
                bool bare = c.marks.empty() && c.tails.empty() && c.branches.empty();
                if (bare) {
                    HodgeSeries psi;
                    for (int j = 0; 2 * j <= trunc; ++j) psi.add_term(2 * j, Monomial::L(j), 1);
                    s = psi;
                }
            }
            s = (s * tails_sym(ctx, c.tails, trunc)).truncated(trunc);
            std::map<std::string, std::pair<int, HodgeSeries>> groups;
            for (auto& b : c.branches) {
                auto& g = groups[detail::branch_str(b)];
                if (g.first == 0) g.second = branch_series(ctx, b, cc.depth, gate, trunc);
                g.first += 1;
            }
            for (auto& [kk, g] : groups)
                s = (s * sym_power(g.second, g.first, trunc)).truncated(trunc);
            w[i] = s;
        }
        inv = dihedral_average(cc, w, trunc);
        inv = (inv * tate_powers(0, cc.depth > 0 ? r : r - 1)).truncated(trunc);
    }

    rec.invariant_pure = inv;
    if (!rec.invariant_pure.pure())
        throw std::logic_error("stratum_pure: purity violated for " + key.canon);
    if (!rec.invariant_pure.integral_nonnegative())
        throw std::logic_error("stratum_pure: non-integral invariant ranks for " + key.canon);
    for (auto& [kk, cval] : rec.invariant_pure.terms) {
        Monomial m = kk.second;
        rec.bm_pure.add_term(2 * key.dim - kk.first, m, cval);
    }

    // off-by-one catalog (generators only; Tate unless a cusp class enters a
    // basepoint source)
    auto add_off = [&](int deg, Monomial mon, const std::string& kind, const std::string& det) {
        rec.off_catalog.push_back({deg, std::move(mon), kind, det});
    };
    if (cc.depth > 0) {
        std::vector<int> rd, rm;
        cc.for_each_branch([&](const CBranch& b) {
            if (b.level == cc.depth) {
                rd.push_back(b.delta);
                rm.push_back((int)b.marks.size() + (int)b.tails.size());
            }
        });
        GradedPiece mf = mapF_pieces(rd, rm, r);
        for (auto& l : mf.off_labels) {
            Monomial m = l.kind == "beta" ? Monomial::L(r) : Monomial::L(1);
            add_off(l.degree, m, l.kind, l.detail);
        }
    } else if (!cc.cycle_core) {
        int l0 = core_legs(cc.core[0]);
        int dcore = cc.core[0].delta;
        if (dcore >= 2) {
            // a basepoint class of bundle degree deg_b sits in stratum degree
            // deg_b + 2r - 1 with weight deg_b + 2r
            for (auto& b : basepoint_basis_g1(table, l0, r, dcore)) {
                Monomial m = Monomial::L(r + (b.theta ? 1 : 0) + b.h_power);
                if (!b.alpha.is_one()) m = m.times(Monomial::S(b.alpha.k));
                add_off(b.degree() + 2 * r - 1, m, "basepoint", b.str());
            }
            GradedPiece off = pic_off(table, l0);
            for (auto& [kk, cval] : off.off_by_one.terms)
                add_off(kk.first, kk.second, "getzler", "");
        }
    } else if (cc.depth == 0) {
        add_off(1, Monomial::L(1), "torus-sign", "");
    }
    return rec;
}

// ---------------------------------------------------------------------------
// The pure E1 table: stratum contributions placed at total cohomological
// degree j = (stratum degree) + 2 codim.
// ---------------------------------------------------------------------------

struct E1Entry {
    std::string canon;
    int dim = 0;
    int codim = 0;
    int stratum_degree = 0;
    long long rank = 0;
    HodgeSeries piece;  // the stratum-degree slice contributing here
};

struct E1Table {
    int n = 0, r = 0, d = 0, max_codim = 0;
    std::map<int, std::vector<E1Entry>> by_degree;  // total degree j -> entries
    std::vector<StratumRecord> records;

    std::map<int, long long> generator_counts() const {
        std::map<int, long long> out;
        for (auto& [j, es] : by_degree)
            for (auto& e : es) out[j] += e.rank;
        return out;
    }
};

inline E1Table e1_pure_table(const CensusContext& ctx, int n, int d, int max_codim) {
    E1Table t;
    t.n = n;
    t.r = ctx.r;
    t.d = d;
    t.max_codim = max_codim;
    for (auto& key : enumerate_coarse_classes(n, ctx.r, d, max_codim)) {
        StratumRecord rec = stratum_pure(ctx, key);
        std::map<int, HodgeSeries> slices;
        for (auto& [kk, c] : rec.invariant_pure.terms)
            slices[kk.first].add_term(kk.first, kk.second, c);
        for (auto& [deg, s] : slices) {
            E1Entry e;
            e.canon = key.canon;
            e.dim = key.dim;
            e.codim = key.codim;
            e.stratum_degree = deg;
            long long rank = 0;
            for (auto& [dd, rr] : s.dims()) rank += rr;
            e.rank = rank;
            e.piece = s;
            t.by_degree[deg + 2 * key.codim].push_back(e);
        }
        t.records.push_back(std::move(rec));
    }
    return t;
}

// ---------------------------------------------------------------------------
// Picard rank and second-cohomology basis.
// ---------------------------------------------------------------------------

struct PicardReport {
    int rank = 0;
    std::vector<std::string> basis;  // "Theta", "H", then divisor canon strings
};

inline PicardReport picard_rank(const CensusContext& ctx, int n, int d) {
    if (d < 2) throw std::domain_error("picard_rank: d >= 2 required");
    PicardReport rep;
    rep.basis = {"Theta", "H"};
    for (auto& k : boundary_divisors(n, ctx.r, d)) rep.basis.push_back(k.canon);
    rep.rank = (int)rep.basis.size();
    return rep;
}

// ---------------------------------------------------------------------------
// Odd-cohomology survey.
// ---------------------------------------------------------------------------

struct OddGenerator {
    std::string canon;
    int total_degree = 0;
    int stratum_degree = 0;
    int codim = 0;
    int cusp_weight = 0;  // the k of S_{k+1}
    long long rank = 0;
    bool survives = true;
    std::string killed_by;
};

struct OddSurvey {
    std::map<int, long long> surviving;  // odd total degree -> surviving rank
    std::vector<OddGenerator> generators;
    int min_odd_degree = -1;  // -1: none
    std::string realized_by;
    int realized_stratum_degree = -1;
};

// capable of odd classes: a genus-one core with enough legs to reach the
// first cusp form
inline bool odd_capable(const CoarseClass& cc) {
    if (cc.cycle_core) return false;
    int l0 = core_legs(cc.core[0]);
    int reach = cc.depth > 0 ? l0 : l0 + 1;
    return CuspTable::max_k(reach) >= 11;
}

// can contribute cusp-carrying off-by-one classes (basepoint sources)
inline bool cusp_killer_capable(const CoarseClass& cc) {
    if (cc.cycle_core || cc.depth > 0) return false;
    int l0 = core_legs(cc.core[0]);
    return CuspTable::max_k(l0 + 2) >= 11;
}

inline OddSurvey odd_survey(const CensusContext& ctx, int n, int d, int max_codim) {
    OddSurvey out;
    auto keys = enumerate_coarse_classes(n, ctx.r, d, max_codim);
    std::vector<StratumRecord> odd_records;
    std::vector<StratumRecord> killers;
    for (auto& key : keys) {
        if (odd_capable(key.cls)) odd_records.push_back(stratum_pure(ctx, key));
        else if (cusp_killer_capable(key.cls)) killers.push_back(stratum_pure(ctx, key));
    }
    for (auto& rec : odd_records) {
        for (auto& [kk, c] : rec.invariant_pure.terms) {
            if (kk.second.tate()) continue;
            int deg = kk.first;
            int j = deg + 2 * rec.key.codim;
            if (j % 2 == 0) continue;
            OddGenerator g;
            g.canon = rec.key.canon;
            g.total_degree = j;
            g.stratum_degree = deg;
            g.codim = rec.key.codim;
            g.cusp_weight = kk.second.s.front().first;
            g.rank = c.as_integer() * monomial_rank(kk.second);
            // survival: no cusp-carrying off-by-one class of a larger
            // stratum in the matching degree, and no ledger record term
            // (ledger terms only ever decorate hyperplane/point classes,
            // checked by the relations module's completeness tests)
            for (auto& killer : killers) {
                if (killer.key.dim <= rec.key.dim) continue;
                int want = j - 1 - 2 * killer.key.codim;
                for (auto& off : killer.off_catalog) {
                    if (off.degree != want || off.monomial.tate()) continue;
                    bool same_k = false;
                    for (auto& [sk, se] : off.monomial.s)
                        if (sk == g.cusp_weight) same_k = true;
                    if (same_k) {
                        g.survives = false;
                        g.killed_by = killer.key.canon;
                    }
                }
            }
            if (g.survives) out.surviving[j] += g.rank;
            out.generators.push_back(std::move(g));
        }
    }
    for (auto& [j, rank] : out.surviving)
        if (rank > 0) {
            out.min_odd_degree = j;
            break;
        }
    if (out.min_odd_degree >= 0) {
        for (auto& g : out.generators)
            if (g.survives && g.total_degree == out.min_odd_degree) {
                out.realized_by = g.canon;
                out.realized_stratum_degree = g.stratum_degree;
                break;
            }
    }
    return out;
}

// Analytic minimum of the odd survey at n = 0 with the built-in cusp table:
// depth-one strata with k radius branches carry S_{k+1} exactly when the
// partition multiplicities stay within r, and the sign invariant forces
// distinct psi exponents within each multiplicity class.
struct OddMinimum {
    bool any = false;
    int min_total_degree = -1;
    int cusp_k = 0;
    std::vector<int> radius_partition;
};

inline OddMinimum odd_survey_minimum(int r, int d) {
    OddMinimum out;
    long long best = -1;
    auto offer = [&](int k, long long psi, const std::vector<int>& part) {
        long long degree = k + psi + 2;  // codimension-one shift
        if (best < 0 || degree < best) {
            best = degree;
            out.any = true;
            out.min_total_degree = (int)degree;
            out.cusp_k = k;
            out.radius_partition = part;
        }
    };
    for (int k = 11; k <= d; k += 2) {
        if (best >= 0 && k + 2 >= best) break;
        // minimize sum m(m-1) over partitions of d into exactly k positive
        // parts with every multiplicity <= r: dynamic program over the
        // largest allowed value, keeping layers for reconstruction
        const long long INF = 1LL << 60;
        std::vector<std::vector<std::vector<long long>>> layers;
        layers.push_back(std::vector<std::vector<long long>>(
            k + 1, std::vector<long long>(d + 1, INF)));
        layers[0][0][0] = 0;
        for (int v = 1; v <= d; ++v) {
            auto dp = layers.back();
            auto& prev = layers.back();
            for (int parts = 0; parts <= k; ++parts)
                for (int sum = 0; sum <= d; ++sum) {
                    if (prev[parts][sum] == INF) continue;
                    for (int m = 1; m <= r && parts + m <= k && sum + m * v <= d; ++m) {
                        long long cand = prev[parts][sum] + (long long)m * (m - 1);
                        if (cand < dp[parts + m][sum + m * v])
                            dp[parts + m][sum + m * v] = cand;
                    }
                }
            layers.push_back(std::move(dp));
        }
        if (layers[d][k][d] == INF) continue;
        std::vector<int> part;
        {
            int parts = k, sum = d;
            for (int v = d; v >= 1 && parts > 0; --v) {
                if (layers[v][parts][sum] == layers[v - 1][parts][sum]) continue;
                for (int m = 1; m <= r && m <= parts && m * v <= sum; ++m) {
                    long long cand = layers[v - 1][parts - m][sum - m * v] +
                                     (long long)m * (m - 1);
                    if (cand == layers[v][parts][sum]) {
                        for (int i = 0; i < m; ++i) part.push_back(v);
                        parts -= m;
                        sum -= m * v;
                        break;
                    }
                }
            }
        }
        offer(k, layers[d][k][d], part);
    }
    return out;
}

}  // namespace vzc
