#pragma once

#include "rational.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ptd {

// A k-subset of {1..n}, kept sorted increasing.
using KSubset = std::vector<int>;

inline KSubset make_subset(std::vector<int> v, int n) {
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end())
        throw std::invalid_argument("subset has repeats");
    if (!v.empty() && (v.front() < 1 || v.back() > n))
        throw std::invalid_argument("subset element out of range");
    return v;
}

inline bool contains(const KSubset& s, int x) {
    return std::binary_search(s.begin(), s.end(), x);
}

inline KSubset sigma_shift(const KSubset& s, int n, int power = 1) {
    KSubset t;
    t.reserve(s.size());
    for (int x : s) t.push_back(sigma(x, n, power));
    std::sort(t.begin(), t.end());
    return t;
}

// K_i: the cyclic interval of size k ending at i, {sigma^{k-1}(i), ..., i}.
inline KSubset coeff_subset(int k, int n, int i) {
    KSubset s;
    for (int r = 0; r < k; ++r) s.push_back(sigma(i, n, r));
    std::sort(s.begin(), s.end());
    return s;
}

// cyclic interval of given length ending at e: {sigma^{len-1}(e), ..., e}
inline KSubset cyclic_interval(int n, int e, int len) {
    KSubset s;
    for (int r = 0; r < len; ++r) s.push_back(sigma(e, n, r));
    std::sort(s.begin(), s.end());
    return s;
}

inline KSubset complement(const KSubset& s, int n) {
    KSubset c;
    for (int x = 1; x <= n; ++x)
        if (!contains(s, x)) c.push_back(x);
    return c;
}

inline KSubset set_union(const KSubset& a, const KSubset& b) {
    KSubset r;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline KSubset set_inter(const KSubset& a, const KSubset& b) {
    KSubset r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

inline KSubset set_diff(const KSubset& a, const KSubset& b) {
    KSubset r;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
    return r;
}

// Decomposition of a k-subset into at most two cyclic intervals.
// Intervals are recorded as (end, gap) pairs: interval = {sigma^gap(end)..end}, size gap+1.
struct TwoIntervals {
    int i = 0, p = 0; // first interval: ends at i, p+1 elements
    int j = 0, q = 0; // second interval: ends at j, q+1 elements
};

// Splits I into two cyclic intervals if possible. A subset that is a single
// cyclic interval is split as (all but the last element | last element).
// Returns nullopt when I is a union of 3+ intervals (or I = {1..n}).
inline std::optional<TwoIntervals> two_interval_decompose(const KSubset& I, int n) {
    const int k = int(I.size());
    if (k < 2 || k >= n) return std::nullopt;
    std::set<int> s(I.begin(), I.end());
    // interval starts: x in I with sigma(x) not in I
    std::vector<int> starts;
    for (int x : I)
        if (!s.count(sigma(x, n))) starts.push_back(x);
    if (starts.size() == 1) {
        // single interval ending at e where sigma^{-1}(e)=e+1 not in I
        int st = starts[0];
        int e = st;
        while (s.count(cyc(e + 1, n))) e = cyc(e + 1, n);
        // all-but-last | last
        TwoIntervals t;
        t.j = e; t.q = 0;
        t.i = sigma(e, n); t.p = k - 2;
        return t;
    }
    if (starts.size() != 2) return std::nullopt;
    auto iv_end = [&](int st) {
        int e = st;
        while (s.count(cyc(e + 1, n))) e = cyc(e + 1, n);
        return e;
    };
    auto iv_len = [&](int st, int e) { return (e - st + n) % n + 1; };
    TwoIntervals t;
    int e1 = iv_end(starts[0]), e2 = iv_end(starts[1]);
    t.i = e1; t.p = iv_len(starts[0], e1) - 1;
    t.j = e2; t.q = iv_len(starts[1], e2) - 1;
    if (t.p + t.q + 2 != k) return std::nullopt; // overlapping wrap; can't happen
    return t;
}

inline std::string subset_symbol(const KSubset& s) {
    bool compact = s.empty() || s.back() <= 9;
    std::ostringstream os;
    os << '[';
    for (size_t t = 0; t < s.size(); ++t) {
        if (t && !compact) os << ' ';
        os << s[t];
    }
    os << ']';
    return os.str();
}

// Rectangle-type face label M_{k,n}(i,j) = {1..i} u {i+j+1..j+k},
// defined for 0<=i<=k-1, 1<=j<=n-k, and (i,j)=(0,0) giving {1..k}.
inline KSubset regular_label(int k, int n, int i, int j) {
    if (!((i == 0 && j == 0) || (0 <= i && i <= k - 1 && 1 <= j && j <= n - k)))
        throw std::invalid_argument("regular_label index out of range");
    KSubset s;
    for (int x = 1; x <= i; ++x) s.push_back(x);
    for (int x = i + j + 1; x <= j + k; ++x) s.push_back(x);
    return make_subset(s, n);
}

// M*_{n-k,n}(j,i) = complement of M_{n-k,n}(j,i) = {j+1..i+j} u {i+n-k+1..n}.
inline KSubset regular_star_label(int k, int n, int j, int i) {
    return complement(regular_label(n - k, n, j, i), n);
}

// Urban-renewal label exchange: given the label of a quadrilateral face
// (center = Jac) and its four neighbour labels in cyclic order
// (Jab, Jbc, Jcd, Jda), return Jbd. Validates the short Plucker pattern.
inline KSubset quad_target(const KSubset& center, const std::vector<KSubset>& nbrs, int n) {
    if (nbrs.size() != 4) throw std::invalid_argument("quad_target needs 4 neighbours");
    const KSubset &N1 = nbrs[0], &N2 = nbrs[1], &N3 = nbrs[2], &N4 = nbrs[3];
    KSubset J = set_inter(N1, N3);
    KSubset bd = set_diff(set_union(N1, N3), center);
    if (set_inter(N2, N4) != J || set_diff(set_union(N2, N4), center) != bd)
        throw std::invalid_argument("quad_target: neighbours do not match exchange pattern");
    KSubset ac = set_diff(center, J);
    if (ac.size() != 2 || bd.size() != 2 || set_union(center, KSubset{}) != set_union(J, ac))
        throw std::invalid_argument("quad_target: malformed quadrilateral exchange");
    // {a,c} and {b,d} must interleave cyclically and neighbours must be J+{consecutive pair}
    std::vector<std::pair<int,int>> four = {{ac[0],0},{ac[1],0},{bd[0],1},{bd[1],1}};
    std::sort(four.begin(), four.end());
    if (four[0].second == four[1].second || four[1].second == four[2].second ||
        four[2].second == four[3].second)
        throw std::invalid_argument("quad_target: indices do not interleave");
    std::multiset<KSubset> expect, got(nbrs.begin(), nbrs.end());
    for (int t = 0; t < 4; ++t)
        expect.insert(set_union(J, make_subset({four[t].first, four[(t + 1) % 4].first}, n)));
    if (expect != std::multiset<KSubset>(got))
        throw std::invalid_argument("quad_target: neighbour labels inconsistent");
    return set_union(J, bd);
}

} // namespace ptd
