#pragma once

#include "grass.hpp"
#include "plabic.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

namespace ptd {

// Weight of a real edge: product of the labels of all faces incident with its
// white endpoint except the (at most two) faces containing the edge itself.
inline LaurentMonomial edge_weight(const PlabicGraph& g, const FaceLabeling& L, int h) {
    if (g.hs[h].arc) throw std::invalid_argument("edge_weight: arc");
    int w = g.vs[g.hs[h].tail].col == Color::white ? g.hs[h].tail : g.head(h);
    if (g.vs[w].col != Color::white) throw std::invalid_argument("edge_weight: no white endpoint");
    int hw = g.hs[h].tail == w ? h : PlabicGraph::twin(h);
    std::set<int> skip{L.faces.face_of[hw], L.faces.face_of[PlabicGraph::twin(hw)]};
    std::set<int> at;
    for (int x : g.vs[w].rot) at.insert(L.faces.face_of[x]);
    LaurentMonomial m(Int(1));
    for (int f : at)
        if (!skip.count(f) && f != L.faces.outer) m *= symbol(L.label[f]);
    return m;
}

// The boundary-conditioned graph G_P(I) together with the edge weights of the
// parent graph and the scaling monomial (product of internal face labels).
struct DimerSetup {
    PlabicGraph g;                        // I-vertices deleted, stalks ensured
    std::map<int, LaurentMonomial> weight; // by even half-edge id
    LaurentMonomial cluster;               // prod of internal labels of G_P
};

// Build G_P(I): blow every boundary vertex of I not already on a stalk onto
// one, freeze the edge weights of the resulting graph, then delete the
// boundary vertices of I. Weights of surviving edges are unchanged by the
// deletion, so they are recorded before it.
inline DimerSetup remove_boundary(const PlabicGraph& g0, const KSubset& I) {
    if (int(I.size()) != g0.k) throw std::invalid_argument("remove_boundary: |I| != k");
    DimerSetup D;
    D.g = g0;
    for (int i : I) {
        int v = D.g.boundary_vertex(i);
        if (v < 0) throw std::invalid_argument("remove_boundary: missing boundary vertex");
        if (D.g.degree(v) > 1) blow_up(D.g, v, D.g.real_halfs(v));
    }
    FaceLabeling L = compute_face_labels(D.g);
    D.cluster = LaurentMonomial(Int(1));
    for (size_t f = 0; f < L.faces.cycles.size(); ++f)
        if (int(f) != L.faces.outer && face_is_internal(D.g, L.faces.cycles[f]))
            D.cluster *= symbol(L.label[f]);
    for (size_t h = 0; h < D.g.hs.size(); h += 2)
        if (D.g.hs[h].alive && !D.g.hs[h].arc) D.weight[int(h)] = edge_weight(D.g, L, int(h));
    for (int i : I) D.g.kill_vertex(D.g.boundary_vertex(i));
    return D;
}

// All perfect matchings on the real edges, as sorted lists of even half-edge
// ids. Forced-edge propagation (degree-1 vertices) plus backtracking on a
// minimum-degree vertex; deterministic order.
inline std::vector<std::vector<int>> enumerate_dimers(const PlabicGraph& g) {
    std::vector<int> verts;
    int blacks = 0;
    for (size_t v = 0; v < g.vs.size(); ++v)
        if (g.vs[v].alive) {
            verts.push_back(int(v));
            if (g.vs[v].col == Color::black) ++blacks;
        }
    if (2 * blacks != int(verts.size()))
        throw std::invalid_argument("enumerate_dimers: unbalanced graph");
    std::vector<char> covered(g.vs.size(), 0);
    std::vector<char> used(g.hs.size(), 0); // even ids; 1 = unavailable
    std::vector<int> chosen;
    std::vector<std::vector<int>> out;

    auto avail = [&](int v) {
        std::vector<int> r;
        for (int h : g.vs[v].rot)
            if (!g.hs[h].arc && !used[h & ~1] && !covered[g.head(h)]) r.push_back(h & ~1);
        return r;
    };
    std::function<void()> rec = [&]() {
        // propagate forced choices; track what we picked for undo
        std::vector<int> forced;
        while (true) {
            int pick = -1, deg = -1, at = -1;
            bool dead = false;
            for (int v : verts) {
                if (covered[v]) continue;
                auto a = avail(v);
                if (a.empty()) { dead = true; break; }
                if (deg < 0 || int(a.size()) < deg) {
                    deg = int(a.size());
                    at = v;
                    pick = a[0];
                }
            }
            if (dead) break;
            if (deg < 0) {
                out.emplace_back(chosen);
                std::sort(out.back().begin(), out.back().end());
                break;
            }
            if (deg == 1) {
                int u = g.hs[pick].tail, w = g.head(pick);
                covered[u] = covered[w] = 1;
                chosen.push_back(pick);
                forced.push_back(pick);
                continue;
            }
            // branch on the min-degree vertex
            auto a = avail(at);
            for (int e : a) {
                int u = g.hs[e].tail, w = g.head(e);
                covered[u] = covered[w] = 1;
                chosen.push_back(e);
                rec();
                chosen.pop_back();
                covered[u] = covered[w] = 0;
                used[e] = 1; // later branches must avoid it
            }
            for (int e : a) used[e] = 0;
            break;
        }
        for (auto it = forced.rbegin(); it != forced.rend(); ++it) {
            covered[g.hs[*it].tail] = covered[g.head(*it)] = 0;
            chosen.pop_back();
        }
    };
    rec();
    std::sort(out.begin(), out.end());
    return out;
}

inline LaurentMonomial matching_weight(const DimerSetup& D, const std::vector<int>& m) {
    LaurentMonomial w(Int(1));
    for (int e : m) w *= D.weight.at(e);
    return w;
}

inline LaurentPolynomial partition_function(const DimerSetup& D) {
    LaurentPolynomial p;
    for (auto& m : enumerate_dimers(D.g)) p += matching_weight(D, m);
    return p;
}

inline LaurentPolynomial scaled_partition_function(const DimerSetup& D) {
    LaurentMonomial c = D.cluster;
    return partition_function(D).divide_by_monomial(c);
}

// Convenience: build G_P(I) from a labeled graph and return the scaled
// partition function directly.
inline LaurentPolynomial scaled_partition_function(const PlabicGraph& g, const KSubset& I) {
    return scaled_partition_function(remove_boundary(g, I));
}

// Independent count oracle: Kasteleyn signing. Edge signs are solved over
// GF(2) so that every arc-free face of length 2m has sign product (-1)^{m+1};
// then |det| of the signed black-by-white adjacency equals the number of
// perfect matchings.
inline Int count_dimers_determinant(const PlabicGraph& g) {
    std::vector<int> blacks, whites;
    std::vector<int> edges; // even ids
    for (size_t v = 0; v < g.vs.size(); ++v)
        if (g.vs[v].alive)
            (g.vs[v].col == Color::black ? blacks : whites).push_back(int(v));
    for (size_t h = 0; h < g.hs.size(); h += 2)
        if (g.hs[h].alive && !g.hs[h].arc) edges.push_back(int(h));
    if (blacks.size() != whites.size()) return 0;
    std::map<int, int> eix;
    for (size_t t = 0; t < edges.size(); ++t) eix[edges[t]] = int(t);
    Faces F = compute_faces(g);
    // GF(2) system: one row per arc-free face
    std::vector<std::vector<char>> rows;
    std::vector<char> rhs;
    for (size_t f = 0; f < F.cycles.size(); ++f) {
        if (int(f) == F.outer || !face_is_internal(g, F.cycles[f])) continue;
        std::vector<char> r(edges.size(), 0);
        int len = 0;
        for (int h : F.cycles[f]) {
            r[eix.at(h & ~1)] ^= 1;
            ++len;
        }
        rows.push_back(std::move(r));
        rhs.push_back(char((len / 2 + 1) & 1));
    }
    std::vector<char> sign(edges.size(), 0);
    size_t col = 0;
    for (size_t r = 0; r < rows.size() && col < edges.size(); ++col) {
        size_t piv = r;
        while (piv < rows.size() && !rows[piv][col]) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        std::swap(rhs[r], rhs[piv]);
        for (size_t t = 0; t < rows.size(); ++t)
            if (t != r && rows[t][col]) {
                for (size_t c2 = 0; c2 < edges.size(); ++c2) rows[t][c2] ^= rows[r][c2];
                rhs[t] ^= rhs[r];
            }
        ++r;
    }
    // back-substitute any solution
    for (size_t r = rows.size(); r-- > 0;) {
        size_t lead = edges.size();
        char acc = rhs[r];
        for (size_t c2 = 0; c2 < edges.size(); ++c2)
            if (rows[r][c2]) {
                if (lead == edges.size())
                    lead = c2;
                else
                    acc ^= sign[c2];
            }
        if (lead == edges.size()) {
            if (acc) throw std::logic_error("kasteleyn signing infeasible");
            continue;
        }
        sign[lead] = acc;
    }
    std::map<int, int> bix, wix;
    for (size_t t = 0; t < blacks.size(); ++t) bix[blacks[t]] = int(t);
    for (size_t t = 0; t < whites.size(); ++t) wix[whites[t]] = int(t);
    std::vector<std::vector<Int>> K(blacks.size(), std::vector<Int>(whites.size(), 0));
    for (size_t t = 0; t < edges.size(); ++t) {
        int h = edges[t];
        int u = g.hs[h].tail, w = g.head(h);
        if (g.vs[u].col != Color::black) std::swap(u, w);
        K[bix[u]][wix[w]] += sign[t] ? -1 : 1;
    }
    Int d = det_bareiss(K);
    return d < 0 ? -d : d;
}

// Condensation identity: the scaled partition functions of J∪{a,c}, J∪{b,d},
// J∪{a,b}, J∪{c,d}, J∪{a,d}, J∪{b,c} satisfy the short Plucker relation.
// Checked exactly at `points` random generic points.
inline bool condensation_check(const PlabicGraph& g, const KSubset& J, int a, int b, int c, int d,
                               std::mt19937_64& rng, int points = 20) {
    if (!(1 <= a && a < b && b < c && c < d && d <= g.n))
        throw std::invalid_argument("condensation_check: need 1 <= a < b < c < d <= n");
    for (int x : {a, b, c, d})
        if (std::find(J.begin(), J.end(), x) != J.end())
            throw std::invalid_argument("condensation_check: J meets {a,b,c,d}");
    auto ext = [&](int x, int y) {
        KSubset s = J;
        s.push_back(x);
        s.push_back(y);
        return make_subset(s, g.n);
    };
    auto Pac = scaled_partition_function(g, ext(a, c)), Pbd = scaled_partition_function(g, ext(b, d)),
         Pab = scaled_partition_function(g, ext(a, b)), Pcd = scaled_partition_function(g, ext(c, d)),
         Pad = scaled_partition_function(g, ext(a, d)), Pbc = scaled_partition_function(g, ext(b, c));
    for (int t = 0; t < points; ++t) {
        auto p = random_generic_point(g.k, g.n, rng);
        if (Pac.evaluate(p) * Pbd.evaluate(p) !=
            Pab.evaluate(p) * Pcd.evaluate(p) + Pad.evaluate(p) * Pbc.evaluate(p))
            return false;
    }
    return true;
}

// Hexagon type of grid cell (a,b) of the regular-star graph when the removed
// boundary subset is the rectangle label with parameters (i,j). First match
// wins; the catch-all is Z.
inline char hexagon_type(int a, int b, int i, int j) {
    if (i == 0 && j == 0) return 'Z';
    if (a == j && b == i) return 'O';
    if (a < j && b == i) return 'A';
    if (a + b == i + j && a < j) return 'B';
    if (a == j && b > i) return 'C';
    if (a + b < i + j && b > i) return 'X';
    if (a + b > i + j && a < j) return 'Y';
    return 'Z';
}

struct RegularDimer {
    DimerSetup setup;
    std::vector<int> matching;                  // sorted even half ids
    std::map<std::pair<int, int>, char> types;  // hexagon grid cell -> type
};

// The unique perfect matching of the regular-star graph of (k,n) with the
// rectangle label M(i,j) removed from the boundary, assembled cell by cell
// from the per-type slot patterns (derived once by exhaustive enumeration
// over all (k,n,i,j) with n <= 8 and frozen here), then completed with the
// forced stalk edges.
inline RegularDimer unique_regular_dimer(int k, int n, int i, int j) {
    if (!((i == 0 && j == 0) || (0 <= i && i <= k - 1 && 1 <= j && j <= n - k)))
        throw std::invalid_argument("unique_regular_dimer: (i,j) out of range");
    if (k < 2 || k > n - 2) throw std::invalid_argument("unique_regular_dimer: need 2 <= k <= n-2");
    // matched slots per type, in slot order L, TL, TR, R, BR, BL
    static const std::map<char, std::array<int, 6>> pattern = {
        {'O', {0, 0, 0, 0, 1, 0}}, {'A', {0, 0, 1, 0, 1, 0}}, {'B', {0, 0, 0, 1, 0, 1}},
        {'C', {1, 0, 0, 0, 1, 0}}, {'X', {0, 0, 1, 0, 0, 1}}, {'Y', {1, 0, 0, 1, 0, 0}},
        {'Z', {0, 1, 0, 0, 1, 0}},
    };
    HexInfo hex;
    RegularDimer R{remove_boundary(build_regular_star(k, n, &hex), regular_label(k, n, i, j)), {}, {}};
    const PlabicGraph& g = R.setup.g;
    std::set<int> picked;
    for (auto& [ab, slots] : hex.slots) {
        char t = hexagon_type(ab.first, ab.second, i, j);
        R.types[ab] = t;
        auto& pat = pattern.at(t);
        for (int sl = 0; sl < 6; ++sl) {
            int e = slots[sl] & ~1;
            if (pat[sl] && slots[sl] >= 0 && g.hs[e].alive) picked.insert(e);
        }
    }
    // complete with forced edges: the residual graph is a union of stalk
    // chains, so repeated degree-1 propagation covers it without branching
    std::vector<char> covered(g.vs.size(), 0);
    for (int e : picked) covered[g.hs[e].tail] = covered[g.head(e)] = 1;
    for (bool progress = true; progress;) {
        progress = false;
        for (size_t v = 0; v < g.vs.size(); ++v) {
            if (!g.vs[v].alive || covered[v]) continue;
            int avail = -1, navail = 0;
            for (int h : g.real_halfs(int(v)))
                if (!covered[g.head(h)]) {
                    avail = h & ~1;
                    ++navail;
                }
            if (navail == 0) throw std::logic_error("unique_regular_dimer: stuck vertex");
            if (navail > 1) continue;
            picked.insert(avail);
            covered[g.hs[avail].tail] = covered[g.head(avail)] = 1;
            progress = true;
        }
    }
    for (size_t v = 0; v < g.vs.size(); ++v)
        if (g.vs[v].alive && !covered[v]) throw std::logic_error("unique_regular_dimer: not a perfect matching");
    R.matching.assign(picked.begin(), picked.end());
    return R;
}

} // namespace ptd
