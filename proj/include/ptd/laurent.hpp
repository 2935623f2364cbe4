#pragma once

#include "grass.hpp"

#include <map>
#include <sstream>

namespace ptd {

// Exponent vector over Plucker symbols [I]; zero exponents are not stored.
using Powers = std::map<KSubset, int>;

struct LaurentMonomial {
    Int coeff = 1;
    Powers pw;

    LaurentMonomial() = default;
    explicit LaurentMonomial(Int c) : coeff(std::move(c)) {}
    LaurentMonomial(Int c, Powers p) : coeff(std::move(c)), pw(std::move(p)) {
        prune();
    }

    void prune() {
        for (auto it = pw.begin(); it != pw.end();)
            it = (it->second == 0) ? pw.erase(it) : std::next(it);
    }

    LaurentMonomial& operator*=(const LaurentMonomial& o) {
        coeff *= o.coeff;
        for (auto& [s, e] : o.pw) {
            int& x = pw[s];
            x += e;
            if (x == 0) pw.erase(s);
        }
        return *this;
    }
    friend LaurentMonomial operator*(LaurentMonomial a, const LaurentMonomial& b) {
        a *= b;
        return a;
    }

    bool operator==(const LaurentMonomial& o) const { return coeff == o.coeff && pw == o.pw; }
    bool operator<(const LaurentMonomial& o) const {
        if (pw != o.pw) return pw < o.pw;
        return cmp(coeff, o.coeff) < 0;
    }

    Rat evaluate(const GrassPoint& p) const {
        Rat v{coeff};
        for (auto& [s, e] : pw) {
            Rat x = plucker(p, s);
            if (x == 0 && e < 0) throw std::domain_error("monomial evaluation: division by zero");
            for (int t = 0; t < e; ++t) v *= x;
            for (int t = 0; t > e; --t) v /= x;
        }
        return v;
    }

    std::string str() const {
        std::ostringstream os;
        os << coeff.get_str();
        for (auto& [s, e] : pw) {
            os << '*' << subset_symbol(s);
            if (e != 1) os << '^' << e;
        }
        return os.str();
    }
};

inline LaurentMonomial symbol(const KSubset& s, int e = 1) {
    LaurentMonomial m;
    if (e != 0) m.pw[s] = e;
    return m;
}

struct LaurentPolynomial {
    // canonical form: sorted by exponent vector, no zero coefficients
    std::map<Powers, Int> terms;

    LaurentPolynomial() = default;
    explicit LaurentPolynomial(const LaurentMonomial& m) {
        if (m.coeff != 0) terms[m.pw] = m.coeff;
    }

    bool is_zero() const { return terms.empty(); }
    bool operator==(const LaurentPolynomial& o) const { return terms == o.terms; }

    LaurentPolynomial& operator+=(const LaurentMonomial& m) {
        if (m.coeff == 0) return *this;
        Int& c = terms[m.pw];
        c += m.coeff;
        if (c == 0) terms.erase(m.pw);
        return *this;
    }
    LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
        for (auto& [p, c] : o.terms) {
            Int& x = terms[p];
            x += c;
            if (x == 0) terms.erase(p);
        }
        return *this;
    }
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
        a += b;
        return a;
    }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
        LaurentPolynomial r;
        for (auto& [pa, ca] : a.terms)
            for (auto& [pb, cb] : b.terms) {
                LaurentMonomial m(ca * cb, pa);
                m *= LaurentMonomial(Int(1), pb);
                r += m;
            }
        return r;
    }

    // Divide every term by the given monomial (exact in the Laurent ring).
    LaurentPolynomial divide_by_monomial(const LaurentMonomial& d) const {
        if (d.coeff == 0) throw std::domain_error("division by zero monomial");
        LaurentPolynomial r;
        for (auto& [p, c] : terms) {
            Int q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), c.get_mpz_t(), d.coeff.get_mpz_t());
            if (rem != 0) throw std::domain_error("coefficient not divisible");
            Powers np = p;
            for (auto& [s, e] : d.pw) {
                int& x = np[s];
                x -= e;
                if (x == 0) np.erase(s);
            }
            r += LaurentMonomial(q, np);
        }
        return r;
    }

    Rat evaluate(const GrassPoint& pt) const {
        Rat v(0);
        for (auto& [p, c] : terms) v += LaurentMonomial(c, p).evaluate(pt);
        return v;
    }

    size_t term_count() const { return terms.size(); }

    std::string str() const {
        if (terms.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto& [p, c] : terms) {
            if (!first) os << " + ";
            os << LaurentMonomial(c, p).str();
            first = false;
        }
        return os.str();
    }
};

// twist of a Plucker coordinate supported on at most two cyclic intervals,
// as a monomial in Plucker symbols: twist[I] = [J] * prod of coefficient symbols.
inline LaurentMonomial twist_formula_two_interval(const KSubset& I, int n) {
    auto d = two_interval_decompose(I, n);
    if (!d) throw std::invalid_argument("subset is not a union of <=2 cyclic intervals");
    const int k = int(I.size());
    KSubset J = set_union(cyclic_interval(n, sigma(d->i, n, d->p + 1), d->q + 1),
                          cyclic_interval(n, sigma(d->j, n, d->q + 1), d->p + 1));
    if (int(J.size()) != k) throw std::logic_error("two-interval target J malformed");
    LaurentMonomial m = symbol(J);
    for (int r = 1; r <= d->p; ++r) m *= symbol(coeff_subset(k, n, sigma(d->i, n, r)));
    for (int r = 1; r <= d->q; ++r) m *= symbol(coeff_subset(k, n, sigma(d->j, n, r)));
    return m;
}

// Double twist of [I] as a monomial: [sigma^k(I)] * prod_{i in I} [K_{sigma^2 i}]...[K_{sigma^{k-1} i}].
inline LaurentMonomial double_twist_formula(const KSubset& I, int n) {
    const int k = int(I.size());
    LaurentMonomial m = symbol(sigma_shift(I, n, k));
    for (int i : I)
        for (int s = 2; s <= k - 1; ++s) m *= symbol(coeff_subset(k, n, sigma(i, n, s)));
    return m;
}

} // namespace ptd
