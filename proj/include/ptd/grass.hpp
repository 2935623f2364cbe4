#pragma once

#include "matrix.hpp"
#include "subsets.hpp"

#include <functional>
#include <random>

namespace ptd {

// A point of Gr(k,n): full-rank k x n rational matrix; columns indexed 1..n.
struct GrassPoint {
    int k = 0, n = 0;
    Matrix m;

    GrassPoint() = default;
    GrassPoint(int k_, int n_) : k(k_), n(n_), m(k_, n_) {}

    std::vector<Rat> col(int j) const { // j in 1..n
        std::vector<Rat> v(k);
        for (int r = 0; r < k; ++r) v[r] = m(r, j - 1);
        return v;
    }
};

// Plucker coordinate [I]: minor on columns I taken in increasing order.
inline Rat plucker(const GrassPoint& p, const KSubset& I) {
    if (int(I.size()) != p.k) throw std::invalid_argument("plucker: |I| != k");
    Matrix sub(p.k, p.k);
    for (int c = 0; c < p.k; ++c)
        for (int r = 0; r < p.k; ++r) sub(r, c) = p.m(r, I[c] - 1);
    return det(sub);
}

// Generalized cross product of k-1 vectors in Q^k, defined by
// <cross(v1..v_{k-1}), v> = det(v1,...,v_{k-1},v).
inline std::vector<Rat> cross(const std::vector<std::vector<Rat>>& vs, int k) {
    if (int(vs.size()) != k - 1) throw std::invalid_argument("cross: needs k-1 vectors");
    std::vector<Rat> w(k);
    Matrix m(k, k);
    for (int c = 0; c < k - 1; ++c)
        for (int r = 0; r < k; ++r) m(r, c) = vs[c][r];
    for (int j = 0; j < k; ++j) {
        for (int r = 0; r < k; ++r) m(r, k - 1) = (r == j) ? Rat(1) : Rat(0);
        w[j] = det(m);
    }
    return w;
}

inline Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat s(0);
    for (size_t t = 0; t < a.size(); ++t) s += a[t] * b[t];
    return s;
}

// Sign eps_i = (-1)^{i(k-i)} for i <= k-1, else +1.
inline int twist_sign(int k, int i) {
    if (i > k - 1) return 1;
    return (long(i) * (k - i)) % 2 == 0 ? 1 : -1;
}

// Column i of twist(p) is eps_i * cross(p_{sigma^{k-1}(i)}, ..., p_{sigma(i)}).
// For k=1 the empty cross product is (1), so twist(p) is the all-ones row.
inline GrassPoint twist(const GrassPoint& p) {
    GrassPoint t(p.k, p.n);
    for (int i = 1; i <= p.n; ++i) {
        std::vector<std::vector<Rat>> vs;
        for (int r = p.k - 1; r >= 1; --r) vs.push_back(p.col(sigma(i, p.n, r)));
        auto w = cross(vs, p.k);
        int e = twist_sign(p.k, i);
        for (int r = 0; r < p.k; ++r) t.m(r, i - 1) = e < 0 ? -w[r] : w[r];
    }
    return t;
}

inline Rat twist_plucker(const GrassPoint& p, const KSubset& I) {
    return plucker(twist(p), I);
}

inline GrassPoint twist_iterate(const GrassPoint& p, int times) {
    GrassPoint q = p;
    for (int t = 0; t < times; ++t) q = twist(q);
    return q;
}

// rho(p): column j is column sigma(j) of p.
inline GrassPoint rho(const GrassPoint& p) {
    GrassPoint r(p.k, p.n);
    for (int j = 1; j <= p.n; ++j)
        for (int t = 0; t < p.k; ++t) r.m(t, j - 1) = p.m(t, sigma(j, p.n) - 1);
    return r;
}

// Diagonal entries h_i = eps_{sigma(i)} eps_i [K_{sigma^2(i)}](p) ... [K_{sigma^{k-1}(i)}](p).
// Satisfies: column i of twist(twist(p)) = (-1)^{k-1} h_i p_{sigma^k(i)}.
inline std::vector<Rat> double_twist_diagonal(const GrassPoint& p) {
    std::vector<Rat> h(p.n);
    for (int i = 1; i <= p.n; ++i) {
        Rat v(twist_sign(p.k, sigma(i, p.n)) * twist_sign(p.k, i));
        for (int s = 2; s <= p.k - 1; ++s)
            v *= plucker(p, coeff_subset(p.k, p.n, sigma(i, p.n, s)));
        h[i - 1] = v;
    }
    return h;
}

// Generic point sampling: small integer entries, full rank, every cyclic
// Plucker coordinate [K_i] nonzero (so twists and BFZ quotients are defined).
inline GrassPoint random_generic_point(int k, int n, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-9, 9);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        GrassPoint p(k, n);
        for (int r = 0; r < k; ++r)
            for (int c = 0; c < n; ++c) p.m(r, c) = Rat(d(rng));
        if (rank(p.m) != k) continue;
        // require every Plucker coordinate nonzero, so any Laurent
        // expression in minors can be evaluated at p
        bool ok = true;
        KSubset I(k);
        std::function<void(int, int)> go = [&](int pos, int start) {
            if (!ok) return;
            if (pos == k) {
                if (plucker(p, I) == 0) ok = false;
                return;
            }
            for (int c = start; c <= n && ok; ++c) {
                I[pos] = c;
                go(pos + 1, c + 1);
            }
        };
        go(0, 1);
        if (ok) return p;
    }
    throw std::runtime_error("random_generic_point: sampling failed");
}

} // namespace ptd
