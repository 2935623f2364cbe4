#pragma once

#include "rational.hpp"

#include <cassert>
#include <vector>

namespace ptd {

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Rat> a; // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Rat(0)) {}

    Rat& operator()(int r, int c) { return a[size_t(r) * cols + c]; }
    const Rat& operator()(int r, int c) const { return a[size_t(r) * cols + c]; }

    bool operator==(const Matrix& o) const {
        if (rows != o.rows || cols != o.cols) return false;
        for (size_t i = 0; i < a.size(); ++i)
            if (cmp(a[i], o.a[i]) != 0) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols, rows);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c) t(c, r) = (*this)(r, c);
        return t;
    }
};

inline Matrix operator*(const Matrix& x, const Matrix& y) {
    assert(x.cols == y.rows);
    Matrix z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            Rat s(0);
            for (int m = 0; m < x.cols; ++m) s += x(i, m) * y(m, j);
            z(i, j) = s;
        }
    return z;
}

inline Matrix scale(const Matrix& x, const Rat& c) {
    Matrix z = x;
    for (auto& v : z.a) v *= c;
    return z;
}

// Fraction-free Bareiss determinant on an integer matrix.
inline Int det_bareiss(std::vector<std::vector<Int>> m) {
    const int n = int(m.size());
    if (n == 0) return Int(1);
    Int sign(1), prev(1);
    for (int c = 0; c < n - 1; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) return Int(0);
        if (piv != c) { std::swap(m[piv], m[c]); sign = -sign; }
        for (int r = c + 1; r < n; ++r) {
            for (int j = c + 1; j < n; ++j) {
                m[r][j] = (m[c][c] * m[r][j] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    return sign * m[n - 1][n - 1];
}

// Exact determinant of a rational matrix: clear denominators per row, Bareiss, rescale.
inline Rat det(const Matrix& x) {
    assert(x.rows == x.cols);
    const int n = x.rows;
    if (n == 0) return Rat(1);
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    Rat factor(1);
    for (int r = 0; r < n; ++r) {
        Int l(1);
        for (int c = 0; c < n; ++c) {
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x(r, c).get_den().get_mpz_t());
        }
        factor /= Rat(l);
        for (int c = 0; c < n; ++c) {
            Rat v = x(r, c) * Rat(l);
            v.canonicalize();
            assert(v.get_den() == 1);
            m[r][c] = v.get_num();
        }
    }
    Rat d = Rat(det_bareiss(std::move(m))) * factor;
    d.canonicalize();
    return d;
}

inline Matrix inverse(const Matrix& x) {
    assert(x.rows == x.cols);
    const int n = x.rows;
    // Gauss-Jordan over Q; exact, fine for the small matrices we handle.
    Matrix m = x, inv(n, n);
    for (int i = 0; i < n; ++i) inv(i, i) = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m(r, c) != 0) { piv = r; break; }
        if (piv < 0) throw std::domain_error("singular matrix");
        if (piv != c)
            for (int j = 0; j < n; ++j) { std::swap(m(piv, j), m(c, j)); std::swap(inv(piv, j), inv(c, j)); }
        Rat d = m(c, c);
        for (int j = 0; j < n; ++j) { m(c, j) /= d; inv(c, j) /= d; }
        for (int r = 0; r < n; ++r) {
            if (r == c || m(r, c) == 0) continue;
            Rat f = m(r, c);
            for (int j = 0; j < n; ++j) { m(r, j) -= f * m(c, j); inv(r, j) -= f * inv(c, j); }
        }
    }
    return inv;
}

inline int rank(Matrix m) {
    int rk = 0;
    for (int c = 0; c < m.cols && rk < m.rows; ++c) {
        int piv = -1;
        for (int r = rk; r < m.rows; ++r)
            if (m(r, c) != 0) { piv = r; break; }
        if (piv < 0) continue;
        if (piv != rk)
            for (int j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(rk, j));
        for (int r = rk + 1; r < m.rows; ++r) {
            if (m(r, c) == 0) continue;
            Rat f = m(r, c) / m(rk, c);
            for (int j = c; j < m.cols; ++j) m(r, j) -= f * m(rk, j);
        }
        ++rk;
    }
    return rk;
}

} // namespace ptd
