#pragma once

#include <string>
#include <vector>

#include "vzc/hodge.hpp"
#include "vzc/tails.hpp"

namespace vzc {

// ---------------------------------------------------------------------------
// Building-block cohomology calculators: pure and off-by-one weight pieces of
// the factor spaces attached to vertices and levels of an aligned graph. All
// series use cohomological grading; pure terms have weight = degree and
// off-by-one terms weight = degree + 1.
// ---------------------------------------------------------------------------

// Pointed parametrized maps with prescribed derivative. The space is empty
// exactly in degree one with vanishing derivative; in degree one with
// non-vanishing derivative it is an affine line; in degree >= 2 it looks like
// affine r-space minus a point, independently of the derivative.
inline GradedPiece map_w_cohomology(int delta, int r, bool w_nonzero) {
    if (delta < 1) throw std::domain_error("map_w_cohomology: delta >= 1");
    GradedPiece g;
    g.dim = delta * (r + 1) - r;
    if (delta == 1) {
        if (!w_nonzero) return GradedPiece::empty_piece();
        g.pure = HodgeSeries::unit();
        return g;
    }
    g.pure = HodgeSeries::unit();
    g.off_by_one = HodgeSeries::term(2 * r - 1, Monomial::L(r), 1);
    g.off_labels.push_back({"beta", "", 2 * r - 1});
    g.check();
    return g;
}

// Tangent data with a non-vanishing linear dependency. Entries of degree zero
// force the vector to vanish (splitting off a torus factor); entries of
// degree one force it not to; higher degrees are unconstrained.
inline GradedPiece dtilde_pieces(const std::vector<int>& deltas, int r) {
    int k = (int)deltas.size();
    if (k < 1) throw std::domain_error("dtilde_pieces: k >= 1");
    int zeros = 0, ones = 0;
    for (int d : deltas) {
        if (d == 0) ++zeros;
        if (d == 1) ++ones;
    }
    int reduced = k - zeros;
    GradedPiece g;
    if (reduced == 1 && ones == 1) return GradedPiece::empty_piece();
    g.dim = reduced >= 1 ? (r + 1) * (reduced - 1) + zeros : k - 1;
    g.pure = HodgeSeries::unit();
    for (int i = 0; i < k; ++i)
        if (deltas[i] == 1) {
            g.off_by_one += HodgeSeries::term(2 * r - 1, Monomial::L(r), 1);
            g.off_labels.push_back({"beta", "v" + std::to_string(i), 2 * r - 1});
        }
    if (k - 1 > 0) {
        g.off_by_one += HodgeSeries::term(1, Monomial::L(1), k - 1);
        for (int i = 0; i < k - 1; ++i)
            g.off_labels.push_back({"torus", "t" + std::to_string(i), 1});
    }
    g.check();
    return g;
}

// Parametrized tuples with the factorisation property: only the fundamental
// class is pure; the off-by-one part collects the basepoint classes of every
// positive-degree entry and the torus classes.
inline GradedPiece mapF_parametrised_pieces(const std::vector<int>& deltas, int r) {
    GradedPiece d = dtilde_pieces(deltas, r);
    if (d.empty) return d;
    GradedPiece g;
    g.dim = d.dim;
    for (int x : deltas)
        if (x >= 1) g.dim += x * (r + 1) - r;
    g.pure = HodgeSeries::unit();
    int k = (int)deltas.size();
    for (int i = 0; i < k; ++i)
        if (deltas[i] >= 1) {
            g.off_by_one += HodgeSeries::term(2 * r - 1, Monomial::L(r), 1);
            g.off_labels.push_back({"beta", "v" + std::to_string(i), 2 * r - 1});
        }
    if (k - 1 > 0) {
        g.off_by_one += HodgeSeries::term(1, Monomial::L(1), k - 1);
        for (int i = 0; i < k - 1; ++i)
            g.off_labels.push_back({"torus", "t" + std::to_string(i), 1});
    }
    g.check();
    return g;
}

// The factorisation mapping stack of a contraction radius: deltas[i] and
// marks[i] give the degree and the number of special points (markings plus
// tail edges) of the i-th radius vertex. Pure part: psi powers 1..r-1 when
// every vertex is univalent or bivalent, otherwise just the fundamental
// class. The psi classes of all such vertices agree on this stack.
inline GradedPiece mapF_pieces(const std::vector<int>& deltas, const std::vector<int>& marks,
                               int r) {
    if (deltas.size() != marks.size())
        throw std::domain_error("mapF_pieces: vector length mismatch");
    int k = (int)deltas.size();
    GradedPiece d = dtilde_pieces(deltas, r);
    if (d.empty) return d;
    GradedPiece g;
    g.dim = (k - 1) - r;
    for (int i = 0; i < k; ++i) g.dim += deltas[i] * (r + 1) + marks[i] - 2;
    bool all_small = true;  // univalent or bivalent: at most one extra special point
    for (int m : marks)
        if (m > 1) all_small = false;
    if (all_small) {
        g.pure = tate_powers(0, r - 1);
        for (int i = 0; i < r; ++i)
            g.pure_labels.push_back("psi^" + std::to_string(i));
    } else {
        g.pure = HodgeSeries::unit();
        g.pure_labels.push_back("1");
    }
    // off-by-one module generators
    int npos = 0;
    for (int x : deltas)
        if (x >= 1) ++npos;
    if (all_small) {
        // only the differences of basepoint classes survive the descent;
        // the per-vertex labels are kept for the relation ledger
        if (npos >= 1)
            g.off_by_one += HodgeSeries::term(2 * r - 1, Monomial::L(r), npos - 1);
    } else {
        g.off_by_one += HodgeSeries::term(2 * r - 1, Monomial::L(r), npos);
        // torus differences between vertices that are not univalent/bivalent
        int big = 0;
        for (int m : marks)
            if (m > 1) ++big;
        if (big >= 2) {
            g.off_by_one += HodgeSeries::term(1, Monomial::L(1), big - 1);
            for (int i = 0; i + 1 < big; ++i)
                g.off_labels.push_back({"alpha-diff", "a" + std::to_string(i), 1});
        }
        for (int i = 0; i < k; ++i)
            if (marks[i] + 1 >= 4) {
                int h1 = (marks[i] + 1) * (marks[i] + 1 - 3) / 2;
                g.off_by_one += HodgeSeries::term(1, Monomial::L(1), h1);
                g.off_labels.push_back({"m0n-h1", "v" + std::to_string(i), 1});
            }
    }
    for (int i = 0; i < k; ++i)
        if (deltas[i] >= 1)
            g.off_labels.push_back({"beta", "v" + std::to_string(i), 2 * r - 1});
    g.check();
    return g;
}

// ---------------------------------------------------------------------------
// Cohomology of the universal Picard stacks over pointed elliptic moduli and
// of the mapping spaces from smooth and nodal elliptic curves.
// ---------------------------------------------------------------------------

inline HodgeSeries pic_pure(const CuspTable& table, int n) {
    return pure_m1n(table, n + 1) + pure_m1n(table, n).tate_twist(1);
}

inline HodgeSeries pic_pair_pure(const CuspTable& table, int n) {
    return pure_m1n(table, n + 2) + pure_m1n(table, n + 1).tate_twist(1).scaled(2) +
           pure_m1n(table, n).tate_twist(2);
}

// rank of the weight-four piece of H^3 of pointed elliptic moduli, in the
// span-of-pullbacks model: one generator per four-element subset of markings
inline long long getzler_rank(int m) {
    if (m < 4) return 0;
    long long c = 1;
    for (int i = 0; i < 4; ++i) c = c * (m - i) / (i + 1);
    return c;
}

inline GradedPiece pic_off(const CuspTable& table, int n) {
    (void)table;
    GradedPiece g;
    g.dim = n + 1;
    long long r3 = getzler_rank(n + 1);
    long long r5 = getzler_rank(n);
    if (r3) {
        g.off_by_one += HodgeSeries::term(3, Monomial::L(2), r3);
        g.off_labels.push_back({"getzler", "deg3", 3});
    }
    if (r5) {
        g.off_by_one += HodgeSeries::term(5, Monomial::L(3), r5);
        g.off_labels.push_back({"getzler", "deg5", 5});
    }
    return g;
}

// Pure weight cohomology of maps from smooth pointed elliptic curves, through
// the quasimap bundle: Picard pure part times hyperplane powers 0..r. For
// degree zero the space is the product with projective space.
inline GradedPiece m1n_maps_pure(const CuspTable& table, int n, int r, int d) {
    if (d == 1) return GradedPiece::empty_piece();
    GradedPiece g;
    if (d == 0) {
        g.dim = n + r;
        g.pure = (pure_m1n(table, n) * tate_powers(0, r)).truncated(2 * g.dim);
        g.check();
        return g;
    }
    g.dim = n + d * (r + 1);
    g.pure = (pic_pure(table, n) * tate_powers(0, r)).truncated(2 * g.dim);
    for (int i = 0; i <= r; ++i) g.pure_labels.push_back("H^" + std::to_string(i));
    g.pure_labels.push_back("Theta");
    g.check();
    return g;
}

// Pure weight cohomology of maps from a cycle of rational curves with
// positive total degree: invariant polynomials in the psi classes of the
// undecorated cycle vertices, times r hyperplane powers (the census applies
// the automorphism averaging; this returns the pre-invariant factor). The
// degree-zero aligned variant has no psi classes and the full projective
// factor instead.
inline GradedPiece cycle_core_pieces(int k, const std::vector<int>& deltas,
                                     const std::vector<int>& marks, int r) {
    if ((int)deltas.size() != k || (int)marks.size() != k)
        throw std::domain_error("cycle_core_pieces: vector length mismatch");
    int d = 0, legs = 0;
    for (int x : deltas) d += x;
    for (int m : marks) legs += m;
    if (d < 1) throw std::domain_error("cycle_core_pieces: positive total degree required");
    GradedPiece g;
    g.dim = legs - k + d * (r + 1);
    int trunc = 2 * g.dim;
    HodgeSeries psi = HodgeSeries::unit();
    for (int i = 0; i < k; ++i) {
        if (marks[i] == 0) {
            // bare cycle vertex: polynomial psi algebra, truncated
            HodgeSeries one_psi;
            for (int j = 0; 2 * j <= trunc; ++j) one_psi.add_term(2 * j, Monomial::L(j), 1);
            psi = (psi * one_psi).truncated(trunc);
            g.pure_labels.push_back("psi[v" + std::to_string(i) + "]");
        }
    }
    g.pure = (psi * tate_powers(0, r - 1)).truncated(trunc);
    for (int i = 0; i < r; ++i) g.pure_labels.push_back("H^" + std::to_string(i));
    g.off_by_one += HodgeSeries::term(1, Monomial::L(1), 1);
    g.off_labels.push_back({"torus-sign", "", 1});
    for (int i = 0; i < k; ++i)
        if (marks[i] + 2 >= 4) g.off_labels.push_back({"m0n-h1", "v" + std::to_string(i), 1});
    g.check();
    return g;
}

// ---------------------------------------------------------------------------
// Basepoint bases: the pure classes of the one-degree-lower quasimap bundle
// that index the basepoint off-by-one classes. Shared by the relation ledger
// and its completeness check.
// ---------------------------------------------------------------------------

struct BasepointLabel {
    bool theta = false;  // which Picard summand the class comes from
    M1Class alpha;       // pure class on the pointed elliptic moduli
    int h_power = 0;     // hyperplane exponent on the quasimap bundle
    int degree() const { return alpha.degree() + 2 * (theta ? 1 : 0) + 2 * h_power; }
    std::string str() const {
        std::string s = alpha.str();
        if (theta) s += "*Theta";
        s += "*H^" + std::to_string(h_power);
        return s;
    }
};

// basis of the pure part of the degree-(d-1) quasimap bundle over the
// (n+1)-pointed Picard stack
inline std::vector<BasepointLabel> basepoint_basis_g1(const CuspTable& table, int n, int r,
                                                      int d) {
    std::vector<BasepointLabel> out;
    if (d < 2) return out;
    int hmax = (d - 1) * (r + 1) - 1;
    for (int m = 0; m <= hmax; ++m) {
        for (auto& a : m1n_pure_basis(table, n + 2)) out.push_back({false, a, m});
        for (auto& a : m1n_pure_basis(table, n + 1)) out.push_back({true, a, m});
    }
    return out;
}

struct CycleBasepointLabel {
    int vertex = 0;       // cycle position receiving the degree-one basepoint
    std::vector<int> psi; // psi exponents of the bare cycle vertices (by position)
    int h_power = 0;
    std::string str() const {
        std::string s = "v" + std::to_string(vertex);
        for (size_t i = 0; i < psi.size(); ++i)
            if (psi[i]) s += "*psi[v" + std::to_string(i) + "]^" + std::to_string(psi[i]);
        s += "*H^" + std::to_string(h_power);
        return s;
    }
};

// basis of the multidegree basepoint classes of a positive-degree cycle: a
// degree-one basepoint at a positive vertex, decorated by psi monomials of
// the bare vertices and a hyperplane power
inline std::vector<CycleBasepointLabel> basepoint_basis_cycle(int k,
                                                              const std::vector<int>& deltas,
                                                              const std::vector<int>& marks,
                                                              int r) {
    std::vector<CycleBasepointLabel> out;
    int d = 0, legs = 0;
    for (int x : deltas) d += x;
    for (int m : marks) legs += m;
    if (d < 2) return out;  // no room for a basepoint splitting
    int aux_dim = (legs - k) + 2 + (r + 1) * (d - 1) - 1;
    int hmax = (d - 1) * (r + 1) - 1;
    std::vector<int> bare;
    for (int i = 0; i < k; ++i)
        if (marks[i] == 0) bare.push_back(i);
    for (int v = 0; v < k; ++v) {
        if (deltas[v] < 1) continue;
        std::vector<int> psi(k, 0);
        std::function<void(int, int)> rec = [&](int bi, int used) {
            if (bi == (int)bare.size()) {
                for (int m = 0; m <= hmax; ++m)
                    if (2 * used + 2 * m <= 2 * aux_dim) {
                        CycleBasepointLabel l;
                        l.vertex = v;
                        l.psi = psi;
                        l.h_power = m;
                        out.push_back(l);
                    }
                return;
            }
            for (int e = 0; 2 * (used + e) <= 2 * aux_dim; ++e) {
                psi[bare[bi]] = e;
                rec(bi + 1, used + e);
            }
            psi[bare[bi]] = 0;
        };
        rec(0, 0);
    }
    return out;
}

}  // namespace vzc
