#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vzc/rational.hpp"

namespace vzc {

// ---------------------------------------------------------------------------
// The bigraded coefficient ring.
//
// Generators: L (Tate class, degree 2, weight 2) and S{k+1} for odd k >= 11
// (cusp-form class of degree k, weight k). A series stores terms
// (cohomological degree, monomial) -> rational coefficient. The degree of a
// term is free; its weight is the weight of the monomial, so a series can
// represent pure pieces (weight == degree) or off-by-one pieces
// (weight == degree + 1).
// ---------------------------------------------------------------------------

struct Monomial {
    int l_exp = 0;
    // sorted list of (k, exponent) for cusp generators S_{k+1}, k odd >= 11
    std::vector<std::pair<int, int>> s;

    int weight() const {
        int w = 2 * l_exp;
        for (auto& [k, e] : s) w += k * e;
        return w;
    }
    bool tate() const { return s.empty(); }

    friend bool operator<(const Monomial& a, const Monomial& b) {
        if (a.l_exp != b.l_exp) return a.l_exp < b.l_exp;
        return a.s < b.s;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.l_exp == b.l_exp && a.s == b.s;
    }

    Monomial times(const Monomial& o) const {
        Monomial r;
        r.l_exp = l_exp + o.l_exp;
        auto it = s.begin();
        auto jt = o.s.begin();
        while (it != s.end() || jt != o.s.end()) {
            if (jt == o.s.end() || (it != s.end() && it->first < jt->first))
                r.s.push_back(*it++);
            else if (it == s.end() || jt->first < it->first)
                r.s.push_back(*jt++);
            else {
                r.s.push_back({it->first, it->second + jt->second});
                ++it, ++jt;
            }
        }
        return r;
    }
    Monomial power(int p) const {
        Monomial r;
        r.l_exp = l_exp * p;
        for (auto& [k, e] : s) r.s.push_back({k, e * p});
        return r;
    }

    std::string str() const {
        if (l_exp == 0 && s.empty()) return "1";
        std::ostringstream os;
        bool first = true;
        if (l_exp > 0) {
            os << "L";
            if (l_exp > 1) os << "^" << l_exp;
            first = false;
        }
        for (auto& [k, e] : s) {
            if (!first) os << "*";
            os << "S" << (k + 1);
            if (e > 1) os << "^" << e;
            first = false;
        }
        return os.str();
    }

    static Monomial one() { return {}; }
    static Monomial L(int e) { Monomial m; m.l_exp = e; return m; }
    static Monomial S(int k, int e = 1) { Monomial m; m.s = {{k, e}}; return m; }
};

// dimension of the space of SL2(Z) cusp forms of the given weight
inline int cusp_dim(int weight) {
    if (weight < 12 || weight % 2 != 0) return 0;
    int d = weight / 12;
    if (weight % 12 == 2) d -= 1;
    return d < 0 ? 0 : d;
}

// rank of the Hodge structure S_{k+1}: holomorphic + antiholomorphic halves
inline int rank_s(int k) { return 2 * cusp_dim(k + 1); }

inline long long monomial_rank(const Monomial& m) {
    long long r = 1;
    for (auto& [k, e] : m.s)
        for (int i = 0; i < e; ++i) r *= rank_s(k);
    return r;
}

class HodgeSeries {
public:
    using Key = std::pair<int, Monomial>;  // (degree, monomial)
    std::map<Key, Rational> terms;

    HodgeSeries() = default;
    static HodgeSeries zero() { return {}; }
    static HodgeSeries unit() { return term(0, Monomial::one(), 1); }
    static HodgeSeries term(int degree, Monomial m, Rational c) {
        HodgeSeries s;
        if (!c.is_zero()) s.terms[{degree, std::move(m)}] = c;
        return s;
    }

    bool is_zero() const { return terms.empty(); }

    void add_term(int degree, const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms.find({degree, m});
        if (it == terms.end()) {
            terms[{degree, m}] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    Rational coeff(int degree, const Monomial& m) const {
        auto it = terms.find({degree, m});
        return it == terms.end() ? Rational(0) : it->second;
    }

    friend HodgeSeries operator+(const HodgeSeries& a, const HodgeSeries& b) {
        HodgeSeries r = a;
        for (auto& [k, c] : b.terms) r.add_term(k.first, k.second, c);
        return r;
    }
    friend HodgeSeries operator-(const HodgeSeries& a, const HodgeSeries& b) {
        HodgeSeries r = a;
        for (auto& [k, c] : b.terms) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend HodgeSeries operator*(const HodgeSeries& a, const HodgeSeries& b) {
        HodgeSeries r;
        for (auto& [ka, ca] : a.terms)
            for (auto& [kb, cb] : b.terms)
                r.add_term(ka.first + kb.first, ka.second.times(kb.second), ca * cb);
        return r;
    }
    HodgeSeries& operator+=(const HodgeSeries& o) { *this = *this + o; return *this; }
    HodgeSeries& operator*=(const HodgeSeries& o) { *this = *this * o; return *this; }
    friend bool operator==(const HodgeSeries& a, const HodgeSeries& b) { return a.terms == b.terms; }
    friend bool operator!=(const HodgeSeries& a, const HodgeSeries& b) { return !(a == b); }

    HodgeSeries scaled(const Rational& c) const {
        HodgeSeries r;
        if (c.is_zero()) return r;
        for (auto& [k, v] : terms) r.terms[k] = v * c;
        return r;
    }

    HodgeSeries truncated(int max_degree) const {
        HodgeSeries r;
        for (auto& [k, c] : terms)
            if (k.first <= max_degree) r.terms[k] = c;
        return r;
    }

    // multiply by L^j (Tate twist): degree shifts by 2j
    HodgeSeries tate_twist(int j) const {
        HodgeSeries r;
        for (auto& [k, c] : terms) {
            Monomial m = k.second;
            m.l_exp += j;
            r.terms[{k.first + 2 * j, m}] = c;
        }
        return r;
    }

    // Poincare-duality flip on a pure series: degree d -> 2*dim - d, the
    // L-exponent adjusts so the result is again pure.
    HodgeSeries dual(int dim) const {
        HodgeSeries r;
        for (auto& [k, c] : terms) {
            Monomial m = k.second;
            int new_deg = 2 * dim - k.first;
            int s_weight = m.weight() - 2 * m.l_exp;
            if ((new_deg - s_weight) % 2 != 0 || new_deg - s_weight < 0)
                throw std::domain_error("hodge: dual of non-dualizable term");
            m.l_exp = (new_deg - s_weight) / 2;
            r.terms[{new_deg, m}] = c;
        }
        return r;
    }

    // degree -> total rank, expanding each S_{k+1} by rank_s(k)
    std::map<int, long long> dims() const {
        std::map<int, long long> d;
        for (auto& [k, c] : terms) d[k.first] += c.as_integer() * monomial_rank(k.second);
        for (auto it = d.begin(); it != d.end();)
            it = it->second == 0 ? d.erase(it) : std::next(it);
        return d;
    }

    // graded trace of an l-cycle permuting l tensor copies of this space:
    // every term (d, m, c) becomes (l*d, m^l, c)
    HodgeSeries power_substitute(int l) const {
        HodgeSeries r;
        for (auto& [k, c] : terms) r.add_term(k.first * l, k.second.power(l), c);
        return r;
    }

    bool pure() const {
        for (auto& [k, c] : terms)
            if (k.second.weight() != k.first) return false;
        return true;
    }
    bool off_by_one() const {
        for (auto& [k, c] : terms)
            if (k.second.weight() != k.first + 1) return false;
        return true;
    }
    int max_degree() const { return terms.empty() ? -1 : terms.rbegin()->first.first; }

    bool integral_nonnegative() const {
        for (auto& [k, c] : terms)
            if (!c.is_integer() || c.num < 0) return false;
        return true;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [k, c] : terms) {
            if (!first) os << " + ";
            first = false;
            if (!(c == Rational(1)) || (k.first == 0 && k.second == Monomial::one()))
                os << c.str();
            if (k.first > 0) os << "t^" << k.first;
            if (!(k.second == Monomial::one())) os << k.second.str();
        }
        return os.str();
    }
};

// geometric-style sum of hyperplane powers: sum_{i=lo}^{hi} t^{2i} L^i
inline HodgeSeries tate_powers(int lo, int hi) {
    HodgeSeries s;
    for (int i = lo; i <= hi; ++i) s.add_term(2 * i, Monomial::L(i), 1);
    return s;
}

// ---------------------------------------------------------------------------
// Symmetric / exterior powers of a graded space, via Newton's recurrences on
// power substitutions. These are the workhorses of the automorphism-invariant
// computation: h_m = invariants of S_m permuting m tensor slots, e_m = the
// sign-isotypic part.
// ---------------------------------------------------------------------------

inline std::vector<HodgeSeries> sym_powers(const HodgeSeries& v, int m, int trunc) {
    std::vector<HodgeSeries> h(m + 1);
    h[0] = HodgeSeries::unit();
    std::vector<HodgeSeries> p(m + 1);
    for (int l = 1; l <= m; ++l) p[l] = v.power_substitute(l).truncated(trunc);
    for (int i = 1; i <= m; ++i) {
        HodgeSeries acc;
        for (int l = 1; l <= i; ++l) acc += (p[l] * h[i - l]).truncated(trunc);
        h[i] = acc.scaled(Rational(1, i));
    }
    return h;
}

inline std::vector<HodgeSeries> ext_powers(const HodgeSeries& v, int m, int trunc) {
    std::vector<HodgeSeries> e(m + 1);
    e[0] = HodgeSeries::unit();
    std::vector<HodgeSeries> p(m + 1);
    for (int l = 1; l <= m; ++l) p[l] = v.power_substitute(l).truncated(trunc);
    for (int i = 1; i <= m; ++i) {
        HodgeSeries acc;
        for (int l = 1; l <= i; ++l) {
            HodgeSeries t = (p[l] * e[i - l]).truncated(trunc);
            acc += (l % 2 == 1) ? t : t.scaled(Rational(-1));
        }
        e[i] = acc.scaled(Rational(1, i));
    }
    return e;
}

inline HodgeSeries sym_power(const HodgeSeries& v, int m, int trunc) {
    return sym_powers(v, m, trunc)[m];
}
inline HodgeSeries ext_power(const HodgeSeries& v, int m, int trunc) {
    return ext_powers(v, m, trunc)[m];
}

// ---------------------------------------------------------------------------
// Cusp multiplicity table: mult(n, k) = multiplicity of S_{k+1} inside the
// weight-k pure cohomology of M_{1,n}, with a character tag describing how
// marking permutations act on the multiplicity space.
// ---------------------------------------------------------------------------

enum class CharacterTag { Trivial, Sign, Custom };

struct CuspEntry {
    int mult = 0;
    CharacterTag character = CharacterTag::Trivial;
    // for Custom: cycle type (sorted descending partition of n) -> trace
    std::map<std::vector<int>, Rational> traces;
};

struct TableIncompleteError : std::runtime_error {
    int n, k;
    TableIncompleteError(int n_, int k_)
        : std::runtime_error("cusp table incomplete: missing entry (n=" + std::to_string(n_) +
                             ", k=" + std::to_string(k_) + ")"),
          n(n_), k(k_) {}
};

class CuspTable {
public:
    // Built-ins: mult(n,k) = 0 for k even, k < 11 or n < k; mult(k,k) = 1
    // carrying the sign character of S_k. Anything else must come from a
    // data file.
    const CuspEntry& entry(int n, int k) const {
        static const CuspEntry zero{};
        static const CuspEntry diag{1, CharacterTag::Sign, {}};
        if (k % 2 == 0 || k < 11 || n < k) return zero;
        auto it = extra_.find({n, k});
        if (it != extra_.end()) return it->second;
        if (n == k) return diag;
        throw TableIncompleteError(n, k);
    }

    int mult(int n, int k) const { return entry(n, k).mult; }

    // largest odd k with a possibly non-zero entry for this n
    static int max_k(int n) { return n < 11 ? 0 : (n % 2 == 1 ? n : n - 1); }

    void set(int n, int k, CuspEntry e) { extra_[{n, k}] = std::move(e); }
    bool has_extra() const { return !extra_.empty(); }

private:
    std::map<std::pair<int, int>, CuspEntry> extra_;
};

// A label for one basis class of the pure cohomology of M_{1,n}: either the
// fundamental class or the j-th copy of a cusp class S_{k+1}.
struct M1Class {
    int k = 0;  // 0 = fundamental class; otherwise odd k >= 11
    int copy = 0;
    int degree() const { return k; }
    bool is_one() const { return k == 0; }
    std::string str() const {
        if (k == 0) return "1";
        return "S" + std::to_string(k + 1) + (copy ? "[" + std::to_string(copy) + "]" : "");
    }
};

inline std::vector<M1Class> m1n_pure_basis(const CuspTable& table, int n) {
    std::vector<M1Class> basis{{0, 0}};
    for (int k = 11; k <= CuspTable::max_k(n); k += 2) {
        int m = table.mult(n, k);
        for (int j = 0; j < m; ++j) basis.push_back({k, j});
    }
    return basis;
}

// 1 + sum_{k odd >= 11} mult(n,k) t^k S_{k+1}
inline HodgeSeries pure_m1n(const CuspTable& table, int n) {
    HodgeSeries s = HodgeSeries::unit();
    for (int k = 11; k <= CuspTable::max_k(n); k += 2) {
        int m = table.mult(n, k);
        if (m) s.add_term(k, Monomial::S(k), m);
    }
    return s;
}

// ---------------------------------------------------------------------------
// A graded piece: the pure and off-by-one weight parts of one building block,
// with symbolic labels on the off-by-one generators for the relation ledger.
// ---------------------------------------------------------------------------

struct OffLabel {
    std::string kind;  // "beta", "torus", "m0n-h1", "alpha-diff", "basepoint", "getzler"
    std::string detail;
    int degree = 0;
    std::string str() const { return kind + (detail.empty() ? "" : "(" + detail + ")"); }
};

struct GradedPiece {
    HodgeSeries pure;
    HodgeSeries off_by_one;
    int dim = 0;
    bool empty = false;
    std::vector<std::string> pure_labels;
    std::vector<OffLabel> off_labels;

    static GradedPiece empty_piece() {
        GradedPiece g;
        g.empty = true;
        return g;
    }

    void check() const {
        if (empty) return;
        if (!pure.pure()) throw std::logic_error("graded piece: pure part has wrong weights");
        if (!off_by_one.is_zero() && !off_by_one.off_by_one())
            throw std::logic_error("graded piece: off-by-one part has wrong weights");
    }
};

}  // namespace vzc
