#pragma once

#include "plabic.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace ptd {

// Exchange quiver on face labels. Arrows are stored as a skew-symmetric
// integer matrix b, with b[i][j] > 0 meaning b[i][j] arrows i -> j.
struct Quiver {
    std::vector<KSubset> verts;     // face labels, sorted
    std::vector<bool> frozen;       // boundary faces
    std::vector<std::vector<int>> b;

    int index_of(const KSubset& s) const {
        for (size_t i = 0; i < verts.size(); ++i)
            if (verts[i] == s) return int(i);
        return -1;
    }
    int arrows(const KSubset& from, const KSubset& to) const {
        int i = index_of(from), j = index_of(to);
        if (i < 0 || j < 0) throw std::invalid_argument("quiver: unknown vertex");
        return b[i][j] > 0 ? b[i][j] : 0;
    }
    bool operator==(const Quiver& o) const {
        return verts == o.verts && frozen == o.frozen && b == o.b;
    }
};

// Arrows cross the internal edges of the graph: for each edge, directed from
// the face on the left of its black-to-white orientation to the face on the
// right. Net multiplicities cancel two-cycles; frozen-frozen arrows dropped.
inline Quiver extract_quiver(const PlabicGraph& g, const FaceLabeling& L) {
    Quiver Q;
    std::map<KSubset, int> idx;
    std::vector<char> internal(L.faces.cycles.size(), 0);
    for (size_t f = 0; f < L.faces.cycles.size(); ++f) {
        if (int(f) == L.faces.outer) continue;
        internal[f] = face_is_internal(g, L.faces.cycles[f]);
        idx[L.label[f]] = 0;
    }
    for (auto& [s, i] : idx) {
        i = int(Q.verts.size());
        Q.verts.push_back(s);
    }
    Q.frozen.assign(Q.verts.size(), true);
    for (size_t f = 0; f < L.faces.cycles.size(); ++f)
        if (int(f) != L.faces.outer && internal[f]) Q.frozen[idx[L.label[f]]] = false;
    Q.b.assign(Q.verts.size(), std::vector<int>(Q.verts.size(), 0));
    for (size_t h = 0; h < g.hs.size(); h += 2) {
        if (!g.hs[h].alive || g.hs[h].arc) continue;
        int bw = g.vs[g.hs[h].tail].col == Color::black ? int(h) : PlabicGraph::twin(int(h));
        int fl = L.faces.face_of[bw];
        int fr = L.faces.face_of[PlabicGraph::twin(bw)];
        if (fl == L.faces.outer || fr == L.faces.outer || fl == fr) continue;
        int i = idx[L.label[fl]], j = idx[L.label[fr]];
        if (Q.frozen[i] && Q.frozen[j]) continue;
        ++Q.b[i][j];
        --Q.b[j][i];
    }
    return Q;
}

inline Quiver extract_quiver(const PlabicGraph& g) {
    return extract_quiver(g, compute_face_labels(g));
}

// Fomin-Zelevinsky mutation at a mutable vertex; the mutated vertex keeps its
// slot but acquires the exchanged label.
inline Quiver mutate(const Quiver& Q, const KSubset& at, const KSubset& new_label) {
    int r = Q.index_of(at);
    if (r < 0) throw std::invalid_argument("mutate: unknown vertex");
    if (Q.frozen[r]) throw std::invalid_argument("mutate: vertex is frozen");
    Quiver R = Q;
    int m = int(Q.verts.size());
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (i == r || j == r)
                R.b[i][j] = -Q.b[i][j];
            else
                R.b[i][j] = Q.b[i][j] +
                            (std::abs(Q.b[i][r]) * Q.b[r][j] + Q.b[i][r] * std::abs(Q.b[r][j])) / 2;
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            if (R.frozen[i] && R.frozen[j]) R.b[i][j] = 0;
    R.verts[r] = new_label;
    // restore canonical vertex order
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](int a, int c) { return R.verts[a] < R.verts[c]; });
    Quiver S;
    S.verts.resize(m);
    S.frozen.resize(m);
    S.b.assign(m, std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) {
        S.verts[i] = R.verts[perm[i]];
        S.frozen[i] = R.frozen[perm[i]];
        for (int j = 0; j < m; ++j) S.b[i][j] = R.b[perm[i]][perm[j]];
    }
    return S;
}

// Exchange relation at a mutable vertex: x * x' = prod(in-arrows) + prod(out).
// Returns the polynomial x*x' - in - out, which must evaluate to zero.
inline LaurentPolynomial exchange_defect(const Quiver& Q, const KSubset& at, const KSubset& new_label) {
    int r = Q.index_of(at);
    if (r < 0 || Q.frozen[r]) throw std::invalid_argument("exchange: bad vertex");
    LaurentMonomial lhs = symbol(at) * symbol(new_label);
    LaurentMonomial in(Int(-1)), out(Int(-1));
    for (size_t j = 0; j < Q.verts.size(); ++j) {
        for (int t = 0; t < Q.b[j][r]; ++t) in *= symbol(Q.verts[j]);
        for (int t = 0; t < Q.b[r][j]; ++t) out *= symbol(Q.verts[j]);
    }
    LaurentPolynomial d;
    d += lhs;
    d += in;
    d += out;
    return d;
}

} // namespace ptd
