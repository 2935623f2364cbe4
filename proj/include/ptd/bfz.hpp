#pragma once

#include "grass.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ptd {

// Minor of an arbitrary rational matrix on 1-based row/column index lists
// (taken in the order given; callers pass sorted lists).
inline Rat minor_on(const Matrix& x, const std::vector<int>& rows, const std::vector<int>& cols) {
    if (rows.size() != cols.size()) throw std::invalid_argument("minor_on: shape mismatch");
    Matrix sub(int(rows.size()), int(cols.size()));
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < cols.size(); ++c) sub(int(r), int(c)) = x(rows[r] - 1, cols[c] - 1);
    return det(sub);
}

inline std::vector<int> interval(int lo, int hi) {
    std::vector<int> v;
    for (int x = lo; x <= hi; ++x) v.push_back(x);
    return v;
}

// The Grassmann permutation w(i) = i + k mod n, with its n x n permutation
// matrix acting by (w x)_row i = x_row w^{-1}(i).
struct GrassmannPermutation {
    int k = 0, n = 0;

    GrassmannPermutation(int k_, int n_) : k(k_), n(n_) {}
    int operator()(int i) const { return cyc(i + k, n); }
    int inv(int i) const { return cyc(i - k, n); }

    Matrix matrix() const {
        Matrix m(n, n);
        for (int j = 1; j <= n; ++j) m((*this)(j)-1, j - 1) = 1;
        return m;
    }
};

// The unipotent lift of a generic point: entry (i,j) is the ratio of the
// Plucker coordinate of K_i with column i replaced by column j to that of
// K_i itself; zero below the staircase i >= j+k (and when j already lies in
// K_i \ {i}).
inline Matrix phi(const GrassPoint& p) {
    const int k = p.k, n = p.n;
    Matrix x(n, n);
    for (int i = 1; i <= n; ++i) {
        KSubset Ki = coeff_subset(k, n, i);
        Rat denom = plucker(p, Ki);
        if (denom == 0) throw std::domain_error("phi: vanishing cyclic minor");
        for (int j = 1; j <= n; ++j) {
            if (i >= j + k) continue;
            KSubset rep;
            bool dup = false;
            for (int c : Ki)
                if (c != i) {
                    if (c == j) dup = true;
                    rep.push_back(c);
                }
            if (dup) continue; // repeated column, minor vanishes
            rep.push_back(j);
            std::sort(rep.begin(), rep.end());
            x(i - 1, j - 1) = plucker(p, rep) / denom;
        }
    }
    return x;
}

// Bruhat-cell membership test for B_- w B_-: (a) the leading minors on
// columns w^{-1}([1,i]) are nonzero, and (b) the minors on columns
// w^{-1}([1,i-1] u {j}) vanish for every i < j with w^{-1}(i) < w^{-1}(j).
inline bool cell_membership(const Matrix& x, const GrassmannPermutation& w) {
    const int n = w.n;
    if (x.rows != n || x.cols != n) throw std::invalid_argument("cell_membership: shape");
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<int> cols;
        for (int t = 1; t <= i; ++t) cols.push_back(w.inv(t));
        std::sort(cols.begin(), cols.end());
        if (minor_on(x, interval(1, i), cols) == 0) return false;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            if (!(w.inv(i) < w.inv(j))) continue;
            std::vector<int> cols;
            for (int t = 1; t <= i - 1; ++t) cols.push_back(w.inv(t));
            cols.push_back(w.inv(j));
            std::sort(cols.begin(), cols.end());
            if (minor_on(x, interval(1, i), cols) != 0) return false;
        }
    return true;
}

// The Grassmannian shadow of the unipotent twist: the first k rows of
// w phi(p)^T, i.e. row i = column sigma^k(i) of phi(p).
inline GrassPoint bfz_twist_point(const GrassPoint& p) {
    const int k = p.k, n = p.n;
    Matrix x = phi(p);
    GrassmannPermutation w(k, n);
    GrassPoint q(k, n);
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= n; ++j) q.m(i - 1, j - 1) = x(j - 1, w.inv(i) - 1);
    return q;
}

} // namespace ptd
