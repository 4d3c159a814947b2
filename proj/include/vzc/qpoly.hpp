#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "vzc/hodge.hpp"
#include "vzc/rational.hpp"

namespace vzc {

// Dense integer polynomials in the Tate class q. All the genus-zero mapping
// spaces in play have polynomial Serre characteristics, so exact division is
// the only division that ever happens; a non-zero remainder signals a wrong
// table entry or a bug and throws.
struct QPoly {
    std::vector<long long> c;  // c[i] = coefficient of q^i

    QPoly() = default;
    explicit QPoly(std::vector<long long> cc) : c(std::move(cc)) { trim(); }
    static QPoly zero() { return QPoly(); }
    static QPoly one() { return QPoly({1}); }
    static QPoly monomial(int k, long long a = 1) {
        QPoly p;
        p.c.assign(k + 1, 0);
        p.c[k] = a;
        return p;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return (int)c.size() - 1; }
    long long at(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : 0; }

    friend QPoly operator+(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at((int)i) + b.at((int)i);
        r.trim();
        return r;
    }
    friend QPoly operator-(const QPoly& a, const QPoly& b) {
        QPoly r;
        r.c.resize(std::max(a.c.size(), b.c.size()), 0);
        for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at((int)i) - b.at((int)i);
        r.trim();
        return r;
    }
    friend QPoly operator*(const QPoly& a, const QPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        QPoly r;
        r.c.assign(a.c.size() + b.c.size() - 1, 0);
        for (size_t i = 0; i < a.c.size(); ++i)
            for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
        r.trim();
        return r;
    }
    QPoly& operator+=(const QPoly& o) { *this = *this + o; return *this; }
    QPoly& operator*=(const QPoly& o) { *this = *this * o; return *this; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c == b.c; }

    QPoly scaled(long long s) const {
        QPoly r = *this;
        for (auto& x : r.c) x *= s;
        r.trim();
        return r;
    }

    // q -> q^l
    QPoly power_substitute(int l) const {
        QPoly r;
        if (is_zero()) return r;
        r.c.assign((c.size() - 1) * l + 1, 0);
        for (size_t i = 0; i < c.size(); ++i) r.c[i * l] = c[i];
        r.trim();
        return r;
    }

    // exact division; throws when the remainder is non-zero
    QPoly divide_exact(const QPoly& d) const {
        if (d.is_zero()) throw std::domain_error("qpoly: division by zero");
        QPoly rem = *this, q;
        if (rem.is_zero()) return q;
        q.c.assign(std::max<int>(0, rem.degree() - d.degree() + 1), 0);
        while (!rem.is_zero() && rem.degree() >= d.degree()) {
            long long lead = rem.c.back();
            long long dl = d.c.back();
            if (lead % dl != 0) throw std::domain_error("qpoly: inexact division");
            long long f = lead / dl;
            int shift = rem.degree() - d.degree();
            q.c[shift] = f;
            for (int i = 0; i <= d.degree(); ++i) rem.c[shift + i] -= f * d.c[i];
            rem.trim();
        }
        if (!rem.is_zero()) throw std::domain_error("qpoly: inexact division");
        q.trim();
        return q;
    }

    bool palindromic() const {
        if (is_zero()) return true;
        for (int i = 0; i <= degree(); ++i)
            if (at(i) != at(degree() - i)) return false;
        return true;
    }

    long long eval1() const {
        long long s = 0;
        for (auto x : c) s += x;
        return s;
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (int i = 0; i <= degree(); ++i) {
            if (!at(i)) continue;
            if (!s.empty()) s += " + ";
            s += std::to_string(at(i));
            if (i) s += "q^" + std::to_string(i);
        }
        return s;
    }

    // purely Tate series: q^i at cohomological degree 2i
    HodgeSeries to_series() const {
        HodgeSeries s;
        for (int i = 0; i <= degree(); ++i)
            if (at(i)) s.add_term(2 * i, Monomial::L(i), at(i));
        return s;
    }
};

inline QPoly q_projective(int r) {  // E(P^r)
    QPoly p;
    p.c.assign(r + 1, 1);
    return p;
}

inline QPoly q_conf_p1(int m) {  // ordered configurations of m points on P^1
    QPoly p = QPoly::one();
    for (int j = 0; j < m; ++j) p *= QPoly({1 - j, 1});  // (q + 1 - j)
    return p;
}

inline QPoly q_m0n_open(int n) {  // E(M_{0,n}), n >= 3
    QPoly p = QPoly::one();
    for (int j = 2; j <= n - 2; ++j) p *= QPoly({-j, 1});  // (q - j)
    return p;
}

// points of the line over the degree-j field that generate it: the Moebius
// transform of q^m + 1 over divisors of j
inline QPoly q_exact_points(int j) {
    auto mu = [](int n) {
        int m = 1;
        for (int p = 2; p * p <= n; ++p)
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0;
                m = -m;
            }
        if (n > 1) m = -m;
        return m;
    };
    QPoly e;
    for (int m = 1; m <= j; ++m)
        if (j % m == 0) {
            int c = mu(j / m);
            if (c) e += (QPoly::monomial(m) + QPoly::one()).scaled(c);
        }
    return e;
}

// trace of a marked-point permutation of the given cycle type on the ordered
// configuration space of the line: orbits of each length are placed on
// matching field-degree points, distinct orbits at distinct places
inline QPoly q_conf_trace(const std::vector<int>& cycle_type) {
    std::map<int, int> counts;
    for (int j : cycle_type) ++counts[j];
    QPoly t = QPoly::one();
    for (auto& [j, c] : counts) {
        QPoly ej = q_exact_points(j);
        for (int i = 0; i < c; ++i) t *= ej - QPoly({(long long)j * i});
    }
    return t;
}

// trace of a marked-point permutation on E(M_{0,m}(P^r,delta)); the identity
// gives the plain Serre characteristic
inline QPoly q_open_maps_trace(const std::vector<int>& cycle_type, int delta, int r) {
    int m = 0;
    for (int j : cycle_type) m += j;
    QPoly pgl2 = QPoly({0, -1, 0, 1});  // q^3 - q
    if (delta == 0) {
        if (m < 3) throw std::domain_error("q_open_maps_trace: unstable");
        return (q_conf_trace(cycle_type) * q_projective(r)).divide_exact(pgl2);
    }
    QPoly maps = q_projective(r) *
                 (QPoly::monomial(delta * (r + 1)) - QPoly::monomial(delta * (r + 1) - r));
    return (maps * q_conf_trace(cycle_type)).divide_exact(pgl2);
}

inline QPoly q_open_maps(int m, int delta, int r) {
    return q_open_maps_trace(std::vector<int>(m, 1), delta, r);
}

// fibre of the evaluation map at one fixed marked point (counted in the
// cycle type as a 1-cycle)
inline QPoly q_open_maps_fibre_trace(const std::vector<int>& cycle_type, int delta, int r) {
    return q_open_maps_trace(cycle_type, delta, r).divide_exact(q_projective(r));
}

inline QPoly q_open_maps_fibre(int m, int delta, int r) {
    return q_open_maps(m, delta, r).divide_exact(q_projective(r));
}

}  // namespace vzc
