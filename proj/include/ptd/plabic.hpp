#pragma once

#include "laurent.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace ptd {

enum class Color { black, white };

// Bipartite graph embedded in a disk, stored as a rotation system.
// Half-edges come in twin pairs (h, h^1); rot lists are counterclockwise.
// Boundary vertices are joined in circular order by "arc" edges that model
// the disk boundary; arcs are not matchable graph edges.
struct PlabicGraph {
    int k = 0, n = 0;

    struct Vert {
        Color col = Color::black;
        int bindex = 0; // 1..n for boundary vertices, 0 for internal
        bool alive = false;
        std::vector<int> rot; // outgoing half-edge ids, CCW
        double x = 0, y = 0;
    };
    struct Half {
        int tail = -1;
        bool arc = false;
        bool alive = false;
    };

    std::vector<Vert> vs;
    std::vector<Half> hs;

    static int twin(int h) { return h ^ 1; }
    int head(int h) const { return hs[twin(h)].tail; }

    int new_vertex(Color c, int bindex = 0, double x = 0, double y = 0) {
        vs.push_back({c, bindex, true, {}, x, y});
        return int(vs.size()) - 1;
    }

    // Creates the twin pair; does NOT update rot lists. Returns half with tail u.
    int add_edge(int u, int v, bool arc = false) {
        int h = int(hs.size());
        hs.push_back({u, arc, true});
        hs.push_back({v, arc, true});
        return h;
    }

    int rot_index(int v, int h) const {
        auto& r = vs[v].rot;
        for (size_t t = 0; t < r.size(); ++t)
            if (r[t] == h) return int(t);
        throw std::logic_error("half-edge not in rotation");
    }
    int rot_next(int v, int h) const {
        auto& r = vs[v].rot;
        return r[(rot_index(v, h) + 1) % r.size()];
    }
    int rot_prev(int v, int h) const {
        auto& r = vs[v].rot;
        return r[(rot_index(v, h) + r.size() - 1) % r.size()];
    }

    int degree(int v) const { // real (non-arc) incident edges
        int d = 0;
        for (int h : vs[v].rot)
            if (!hs[h].arc) ++d;
        return d;
    }
    std::vector<int> real_halfs(int v) const {
        std::vector<int> r;
        for (int h : vs[v].rot)
            if (!hs[h].arc) r.push_back(h);
        return r;
    }
    std::vector<int> arc_halfs(int v) const {
        std::vector<int> r;
        for (int h : vs[v].rot)
            if (hs[h].arc) r.push_back(h);
        return r;
    }

    bool is_boundary(int v) const { return vs[v].bindex != 0; }

    int boundary_vertex(int bindex) const {
        for (size_t v = 0; v < vs.size(); ++v)
            if (vs[v].alive && vs[v].bindex == bindex) return int(v);
        return -1;
    }

    void kill_edge(int h) {
        hs[h].alive = hs[twin(h)].alive = false;
        auto rm = [&](int v, int x) {
            auto& r = vs[v].rot;
            r.erase(std::remove(r.begin(), r.end(), x), r.end());
        };
        rm(hs[h].tail, h);
        rm(hs[twin(h)].tail, twin(h));
    }
    void kill_vertex(int v) {
        while (!vs[v].rot.empty()) kill_edge(vs[v].rot.back());
        vs[v].alive = false;
    }

    int edge_count() const {
        int e = 0;
        for (size_t h = 0; h < hs.size(); h += 2)
            if (hs[h].alive && !hs[h].arc) ++e;
        return e;
    }
    int vertex_count() const {
        int c = 0;
        for (auto& v : vs)
            if (v.alive) ++c;
        return c;
    }

    void check_consistency() const {
        for (size_t v = 0; v < vs.size(); ++v) {
            if (!vs[v].alive) continue;
            for (int h : vs[v].rot) {
                if (!hs[h].alive || hs[h].tail != int(v))
                    throw std::logic_error("rotation list corrupt");
            }
        }
        for (size_t h = 0; h < hs.size(); ++h) {
            if (!hs[h].alive) continue;
            if (!hs[h].arc) {
                Color a = vs[hs[h].tail].col, b = vs[head(int(h))].col;
                if (a == b) throw std::logic_error("edge joins equal colors");
            }
        }
    }
};

// ---- faces -------------------------------------------------------------

struct Faces {
    std::vector<std::vector<int>> cycles; // each face lies to the LEFT of its half-edges
    std::vector<int> face_of;             // half-edge id -> face index (-1 dead)
    int outer = -1;                       // the all-arc face, if present
};

inline Faces compute_faces(const PlabicGraph& g) {
    Faces f;
    f.face_of.assign(g.hs.size(), -1);
    for (size_t h0 = 0; h0 < g.hs.size(); ++h0) {
        if (!g.hs[h0].alive || f.face_of[h0] != -1) continue;
        std::vector<int> cyc_;
        int h = int(h0);
        do {
            f.face_of[h] = int(f.cycles.size());
            cyc_.push_back(h);
            h = g.rot_prev(g.head(h), PlabicGraph::twin(h));
            if (cyc_.size() > g.hs.size()) throw std::logic_error("face walk diverged");
        } while (h != int(h0));
        f.cycles.push_back(std::move(cyc_));
    }
    for (size_t i = 0; i < f.cycles.size(); ++i) {
        bool allarc = true;
        for (int h : f.cycles[i])
            if (!g.hs[h].arc) { allarc = false; break; }
        if (allarc && !f.cycles[i].empty()) f.outer = int(i);
    }
    return f;
}

inline bool face_is_internal(const PlabicGraph& g, const std::vector<int>& cycle) {
    for (int h : cycle)
        if (g.hs[h].arc) return false;
    return true;
}

// ---- trips and face labels ----------------------------------------------

struct Trip {
    int start = 0, end = 0;       // boundary indices
    std::vector<int> steps;       // directed half-edges
};

// One trip per boundary vertex i: maximal left turn at white vertices,
// maximal right at black (boundary vertices included, they are black).
// A trip starts by entering the disk across the boundary (formally: turning
// at the start vertex out of its clockwise-next arc) and terminates when
// the turning rule walks onto an arc; in between it may pass straight
// through boundary vertices. Conventions calibrated once against the
// rectangle-label ground truth of the regular graphs.
inline std::vector<Trip> compute_trips(const PlabicGraph& g) {
    std::vector<Trip> trips;
    for (int b = 1; b <= g.n; ++b) {
        int v = g.boundary_vertex(b);
        if (v < 0) throw std::logic_error("missing boundary vertex");
        auto arcs = g.arc_halfs(v);
        if (arcs.empty()) throw std::logic_error("boundary vertex without arcs");
        Trip t;
        t.start = b;
        int h = g.rot_prev(v, arcs[0]); // turn out of the clockwise-next arc
        if (g.hs[h].arc) throw std::logic_error("isolated boundary vertex");
        size_t guard = 4 * g.hs.size() + 8;
        while (true) {
            t.steps.push_back(h);
            int w = g.head(h);
            int back = PlabicGraph::twin(h);
            h = (g.vs[w].col == Color::white) ? g.rot_next(w, back) : g.rot_prev(w, back);
            if (g.hs[h].arc) {
                if (!g.is_boundary(w)) throw std::logic_error("arc at internal vertex");
                t.end = g.vs[w].bindex;
                break;
            }
            if (t.steps.size() > guard) throw std::logic_error("trip does not terminate");
        }
        trips.push_back(std::move(t));
    }
    return trips;
}

struct FaceLabeling {
    Faces faces;
    std::vector<KSubset> label; // per face; empty for outer face
    std::vector<Trip> trips;

    int face_by_label(const KSubset& s) const {
        for (size_t i = 0; i < label.size(); ++i)
            if (label[i] == s) return int(i);
        return -1;
    }
};

// Label every face with the set of trips passing it on their left.
// Validates the trip permutation law (i -> i+k), label sizes, distinctness,
// the face count k(n-k)+1, and that the face immediately clockwise of
// boundary vertex i carries the cyclic interval K_i. Throws on any failure.
inline FaceLabeling compute_face_labels(const PlabicGraph& g) {
    FaceLabeling L;
    L.faces = compute_faces(g);
    L.trips = compute_trips(g);
    std::vector<std::set<int>> acc(L.faces.cycles.size());
    for (auto& t : L.trips) {
        if (t.end != cyc(t.start + g.k, g.n))
            throw std::logic_error("trip permutation is not i -> i+k");
        // The strand cuts the disk in two; every face in the region to its
        // left gets the trip index. Seed with the faces bordering the path on
        // the left, then flood across edges the strand does not use.
        std::set<int> blocked(t.steps.begin(), t.steps.end());
        for (int h : t.steps) blocked.insert(PlabicGraph::twin(h));
        std::vector<int> stack;
        std::vector<bool> left(L.faces.cycles.size(), false);
        for (int h : t.steps) {
            int f = L.faces.face_of[h];
            if (!left[f]) { left[f] = true; stack.push_back(f); }
        }
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int h : L.faces.cycles[f]) {
                if (g.hs[h].arc || blocked.count(h)) continue;
                int f2 = L.faces.face_of[PlabicGraph::twin(h)];
                if (f2 == L.faces.outer || left[f2]) continue;
                left[f2] = true;
                stack.push_back(f2);
            }
        }
        for (size_t f = 0; f < left.size(); ++f)
            if (left[f] && int(f) != L.faces.outer) acc[f].insert(t.start);
    }
    L.label.resize(L.faces.cycles.size());
    std::set<KSubset> seen;
    int labelled = 0;
    for (size_t i = 0; i < L.faces.cycles.size(); ++i) {
        if (int(i) == L.faces.outer) continue;
        L.label[i] = KSubset(acc[i].begin(), acc[i].end());
        if (int(L.label[i].size()) != g.k)
            throw std::logic_error("face label has wrong size");
        if (!seen.insert(L.label[i]).second)
            throw std::logic_error("duplicate face label");
        ++labelled;
    }
    if (labelled != g.k * (g.n - g.k) + 1)
        throw std::logic_error("wrong number of labelled faces");
    // boundary face immediately clockwise of vertex i is the face left of the
    // arc directed from i+1 to i; it must carry K_i.
    for (int i = 1; i <= g.n; ++i) {
        int v = g.boundary_vertex(cyc(i + 1, g.n));
        int arc_prev = -1;
        for (int h : g.arc_halfs(v))
            if (g.vs[g.head(h)].bindex == i) arc_prev = h;
        if (arc_prev < 0) throw std::logic_error("missing boundary arc");
        if (L.label[L.faces.face_of[arc_prev]] != coeff_subset(g.k, g.n, i))
            throw std::logic_error("boundary face labels misplaced");
    }
    return L;
}

// Euler relation for disk-embedded graphs: V - E + F_internal = 1, where
// F_internal counts faces that are neither boundary segments nor the outer face.
inline bool euler_check(const PlabicGraph& g) {
    Faces f = compute_faces(g);
    int internal_faces = 0;
    for (size_t i = 0; i < f.cycles.size(); ++i) {
        if (int(i) == f.outer) continue;
        bool has_arc = false;
        for (int h : f.cycles[i])
            if (g.hs[h].arc) has_arc = true;
        if (!has_arc) ++internal_faces;
    }
    return g.vertex_count() - g.edge_count() + internal_faces == 1;
}

// ---- builders ------------------------------------------------------------

namespace detail {

// Attach boundary arcs: `cworder` lists boundary vertex ids in clockwise order
// around the disk. Rewrites each boundary rotation as
// [arc_to_cwnext, arc_to_cwprev, reals in CCW order starting from the
// direction of the cw-previous neighbour].
inline void finish_boundary(PlabicGraph& g, const std::vector<int>& cworder) {
    const int m = int(cworder.size());
    std::vector<int> arc_to_next(m);
    for (int t = 0; t < m; ++t)
        arc_to_next[t] = g.add_edge(cworder[t], cworder[(t + 1) % m], true);
    for (int t = 0; t < m; ++t) {
        int v = cworder[t];
        int prev = cworder[(t + m - 1) % m];
        double ref = std::atan2(g.vs[prev].y - g.vs[v].y, g.vs[prev].x - g.vs[v].x);
        std::vector<int> reals = g.vs[v].rot;
        std::sort(reals.begin(), reals.end(), [&](int a, int b) {
            auto ang = [&](int h) {
                int u = g.head(h);
                double d = std::atan2(g.vs[u].y - g.vs[v].y, g.vs[u].x - g.vs[v].x) - ref;
                while (d <= 1e-9) d += 2 * M_PI;
                return d;
            };
            return ang(a) < ang(b);
        });
        std::vector<int> rot{arc_to_next[t], PlabicGraph::twin(arc_to_next[(t + m - 1) % m])};
        rot.insert(rot.end(), reals.begin(), reals.end());
        g.vs[v].rot = std::move(rot);
    }
}

inline void sort_rot_ccw(PlabicGraph& g, int v) {
    auto& r = g.vs[v].rot;
    std::sort(r.begin(), r.end(), [&](int a, int b) {
        auto ang = [&](int h) {
            int u = g.head(h);
            return std::atan2(g.vs[u].y - g.vs[v].y, g.vs[u].x - g.vs[v].x);
        };
        return ang(a) < ang(b);
    });
}

} // namespace detail

// Hexagon grid bookkeeping for the regular graphs: for each grid position
// (a,b) (including incomplete boundary hexagons) the six edge slots, stored as
// half-edge ids or -1. Slot order: L, TL, TR, R, BR, BL (L/R vertical sides,
// T*/B* the upper/lower diagonal edges in the hexagonal drawing).
enum HexSlot { SLOT_L = 0, SLOT_TL, SLOT_TR, SLOT_R, SLOT_BR, SLOT_BL };

struct HexInfo {
    std::map<std::pair<int, int>, std::array<int, 6>> slots;
};

// The regular plabic graph of the rectangles seed: n-k-1 rows of k-1 hexagons
// with k-1 top stalks and one bottom-left stalk. 1 <= k <= n-1; k=1 and
// k=n-1 give the fan graphs.
inline PlabicGraph build_regular(int k, int n, HexInfo* hex = nullptr) {
    if (n < 3 || k < 1 || k > n - 1) throw std::invalid_argument("build_regular: bad (k,n)");
    PlabicGraph g;
    g.k = k;
    g.n = n;
    if (k == 1 || k == n - 1) {
        std::vector<int> bnd(n);
        for (int i = 1; i <= n; ++i) {
            double a = -2 * M_PI * i / n + M_PI / 2; // clockwise placement
            bnd[i - 1] = g.new_vertex(Color::black, i, std::cos(a), std::sin(a));
        }
        if (k == n - 1) {
            int hub = g.new_vertex(Color::white);
            for (int i = 1; i <= n; ++i) {
                int h = g.add_edge(hub, bnd[i - 1]);
                g.vs[hub].rot.push_back(h);
                g.vs[bnd[i - 1]].rot.push_back(PlabicGraph::twin(h));
            }
            detail::sort_rot_ccw(g, hub);
        } else {
            for (int j = 1; j <= n - 1; ++j) {
                double xm = (g.vs[bnd[j - 1]].x + g.vs[bnd[j]].x) / 2;
                double ym = (g.vs[bnd[j - 1]].y + g.vs[bnd[j]].y) / 2;
                int w = g.new_vertex(Color::white, 0, xm / 2, ym / 2);
                for (int i : {j, j + 1}) {
                    int h = g.add_edge(w, bnd[i - 1]);
                    g.vs[w].rot.push_back(h);
                    g.vs[bnd[i - 1]].rot.push_back(PlabicGraph::twin(h));
                }
                detail::sort_rot_ccw(g, w);
            }
        }
        std::vector<int> cworder;
        for (int i = 1; i <= n; ++i) cworder.push_back(bnd[i - 1]);
        detail::finish_boundary(g, cworder);
        return g;
    }
    // hexagon body in brick coordinates: hexagon F(a,b), a=1..k-1, b=1..n-k-1,
    // occupies x in [2a+b-1, 2a+b+1] between row lines y=b-1 and y=b.
    const int rows = n - k - 1;
    auto lo = [&](int y) { return (y >= 1 ? y + 1 : y + 2); };
    auto hi = [&](int y) { return (y + 1 <= rows ? y + 2 * k : y + 2 * k - 1); };
    std::map<std::pair<int, int>, int> vid;
    for (int y = 0; y <= rows; ++y)
        for (int x = lo(y); x <= hi(y); ++x) {
            Color c = ((x + y) % 2) ? Color::black : Color::white;
            vid[{x, y}] = g.new_vertex(c, 0, x - 0.5 * y, 0.866 * y);
        }
    std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, int> eid;
    auto connect = [&](std::pair<int, int> a, std::pair<int, int> b) {
        int h = g.add_edge(vid.at(a), vid.at(b));
        g.vs[vid.at(a)].rot.push_back(h);
        g.vs[vid.at(b)].rot.push_back(PlabicGraph::twin(h));
        eid[{a, b}] = h;
        eid[{b, a}] = PlabicGraph::twin(h);
        return h;
    };
    for (int y = 0; y <= rows; ++y)
        for (int x = lo(y); x < hi(y); ++x) connect({x, y}, {x + 1, y});
    for (int b = 1; b <= rows; ++b)
        for (int x = b + 1; x <= b + 2 * k - 1; x += 2) connect({x, b - 1}, {x, b});
    // stalks: k-1 on top, one at bottom left
    std::vector<int> tip(k); // tip[a] for a=1..k-1
    for (int a = 1; a <= k - 1; ++a) {
        int x = 2 * a + rows;
        int t = g.new_vertex(Color::black, a, x - 0.5 * (rows + 1), 0.866 * (rows + 1));
        int h = g.add_edge(t, vid.at({x, rows}));
        g.vs[t].rot.push_back(h);
        g.vs[vid.at({x, rows})].rot.push_back(PlabicGraph::twin(h));
        eid[{{x, rows}, {x, rows + 1}}] = PlabicGraph::twin(h); // stalk as partial vertical
        tip[a] = t;
    }
    int bl = g.new_vertex(Color::black, k + 1, 1 + 0.5, -0.866);
    {
        int h = g.add_edge(bl, vid.at({2, 0}));
        g.vs[bl].rot.push_back(h);
        g.vs[vid.at({2, 0})].rot.push_back(PlabicGraph::twin(h));
    }
    // boundary indices on the lattice
    g.vs[vid.at({n + k - 2, rows})].bindex = k;
    for (int j = 1; j <= rows; ++j) g.vs[vid.at({j + 1, j})].bindex = k + 1 + j;
    for (auto& [xy, v] : vid)
        if (g.vs[v].bindex == 0) detail::sort_rot_ccw(g, v);
    std::vector<int> cworder{bl};
    for (int j = 1; j <= rows; ++j) cworder.push_back(vid.at({j + 1, j}));
    for (int a = 1; a <= k - 1; ++a) cworder.push_back(tip[a]);
    cworder.push_back(vid.at({n + k - 2, rows}));
    detail::finish_boundary(g, cworder);
    if (hex) {
        auto he = [&](std::pair<int, int> a, std::pair<int, int> b) {
            auto it = eid.find({a, b});
            return it == eid.end() ? -1 : it->second;
        };
        for (int a = 0; a <= k - 1; ++a)
            for (int b = 1; b <= n - k; ++b) {
                int x0 = 2 * a + b - 1;
                std::array<int, 6> s;
                s[SLOT_L] = he({x0, b - 1}, {x0, b});
                s[SLOT_TL] = he({x0, b}, {x0 + 1, b});
                s[SLOT_TR] = he({x0 + 1, b}, {x0 + 2, b});
                s[SLOT_R] = he({x0 + 2, b - 1}, {x0 + 2, b});
                s[SLOT_BR] = he({x0 + 1, b - 1}, {x0 + 2, b - 1});
                s[SLOT_BL] = he({x0, b - 1}, {x0 + 1, b - 1});
                hex->slots[{a, b}] = s;
            }
    }
    g.check_consistency();
    return g;
}

// Regular-star graph: build_regular(n-k,n) with colors swapped, boundary
// re-dressed (old stalk tips merge into their attachment; old corner boundary
// vertices become internal and sprout a stalk) and boundary indices shifted
// by k. Face labels come out as complements of the regular (n-k,n) labels.
inline PlabicGraph build_regular_star(int k, int n, HexInfo* hex = nullptr) {
    if (n < 3 || k < 1 || k > n - 1) throw std::invalid_argument("build_regular_star: bad (k,n)");
    if (k == 1 || k == n - 1) {
        PlabicGraph g = build_regular(k, n, hex);
        return g; // the fans are self-star up to relabelling; used directly
    }
    PlabicGraph g = build_regular(n - k, n, hex);
    g.k = k;
    for (auto& v : g.vs)
        if (v.alive) v.col = (v.col == Color::black) ? Color::white : Color::black;
    // collect old boundary info in clockwise order
    std::vector<int> oldb(n); // position t (old index t+1) -> vertex id
    for (size_t v = 0; v < g.vs.size(); ++v)
        if (g.vs[v].alive && g.vs[v].bindex != 0) oldb[g.vs[v].bindex - 1] = int(v);
    // strip arcs
    for (size_t h = 0; h < g.hs.size(); h += 2)
        if (g.hs[h].alive && g.hs[h].arc) g.kill_edge(int(h));
    std::vector<int> newb(n);
    for (int i = 1; i <= n; ++i) {
        int v = oldb[i - 1];
        int nb = cyc(i + k, n);
        auto reals = g.real_halfs(v);
        if (reals.size() == 1) {
            // old stalk: delete tip, its attachment becomes the boundary vertex
            int w = g.head(reals[0]);
            int slot = g.rot_index(w, PlabicGraph::twin(reals[0]));
            g.kill_edge(reals[0]);
            g.vs[v].alive = false;
            g.vs[w].bindex = nb;
            g.vs[w].x = (g.vs[w].x + g.vs[v].x) / 2; // nudge toward old rim
            g.vs[w].y = (g.vs[w].y + g.vs[v].y) / 2;
            // rotate so former stalk direction comes first (reals CCW from rim)
            std::rotate(g.vs[w].rot.begin(), g.vs[w].rot.begin() + std::min<size_t>(slot, g.vs[w].rot.size()), g.vs[w].rot.end());
            newb[nb - 1] = w;
        } else {
            // old corner: becomes internal white, sprouts a stalk
            int t = g.new_vertex(Color::black, nb, 2 * g.vs[v].x - g.vs[g.head(reals[0])].x,
                                 2 * g.vs[v].y - g.vs[g.head(reals[0])].y);
            int h = g.add_edge(t, v);
            g.vs[t].rot.push_back(h);
            // stalk replaces the arcs' slot: reals were stored after the arcs,
            // so rot = [to_t, reals...]
            std::vector<int> rot{PlabicGraph::twin(h)};
            rot.insert(rot.end(), reals.begin(), reals.end());
            g.vs[v].rot = std::move(rot);
            g.vs[v].bindex = 0;
            newb[nb - 1] = t;
        }
    }
    // re-dress boundary vertices in the preserved clockwise order, starting at
    // new index 1; rotation pattern [arc_next, arc_prev, reals...] with the
    // reals keeping their CCW order (they already start at the rim direction).
    std::vector<int> cworder;
    for (int i = 1; i <= n; ++i) cworder.push_back(newb[i - 1]);
    const int m = n;
    std::vector<int> arc_to_next(m);
    for (int t = 0; t < m; ++t)
        arc_to_next[t] = g.add_edge(cworder[t], cworder[(t + 1) % m], true);
    for (int t = 0; t < m; ++t) {
        int v = cworder[t];
        std::vector<int> reals = g.vs[v].rot;
        std::vector<int> rot{arc_to_next[t], PlabicGraph::twin(arc_to_next[(t + m - 1) % m])};
        rot.insert(rot.end(), reals.begin(), reals.end());
        g.vs[v].rot = std::move(rot);
    }
    g.check_consistency();
    return g;
}

// ---- moves ---------------------------------------------------------------

// Split vertex v: a new vertex v2 (same color) takes the contiguous run of
// half-edges `moved` (in rot order); a new middle vertex of opposite color
// joins them. With `moved` = all real edges of a boundary vertex this puts
// the boundary vertex on a stalk. Returns the middle vertex id.
inline int blow_up(PlabicGraph& g, int v, const std::vector<int>& moved) {
    Color cv = g.vs[v].col;
    Color cm = (cv == Color::black) ? Color::white : Color::black;
    if (moved.empty() && !g.is_boundary(v))
        throw std::invalid_argument("blow_up: empty part only allowed at the boundary");
    int mid = g.new_vertex(cm, 0, g.vs[v].x, g.vs[v].y);
    int v2 = g.new_vertex(cv, 0, g.vs[v].x, g.vs[v].y);
    // detach the run from v, preserving cyclic order
    auto& rot = g.vs[v].rot;
    std::vector<int> kept;
    size_t start = 0;
    if (!moved.empty()) {
        // rotate so the run is a prefix
        size_t pos = size_t(g.rot_index(v, moved.front()));
        std::rotate(rot.begin(), rot.begin() + pos, rot.end());
        for (size_t t = 0; t < moved.size(); ++t)
            if (rot[t] != moved[t]) throw std::invalid_argument("blow_up: run not contiguous");
        start = moved.size();
    }
    for (size_t t = start; t < rot.size(); ++t) kept.push_back(rot[t]);
    int hvm = g.add_edge(v, mid);
    int hmv2 = g.add_edge(mid, v2);
    g.vs[v].rot = kept;
    g.vs[v].rot.push_back(hvm); // in the gap the run left behind
    g.vs[v2].rot = moved;
    for (int h : moved) g.hs[h].tail = v2;
    g.vs[v2].rot.push_back(hmv2 ^ 1);
    g.vs[mid].rot = {PlabicGraph::twin(hvm), hmv2};
    return mid;
}

// Contract a degree-2 internal vertex mid, merging its two (same-colored)
// neighbours. Refuses if that would create parallel edges, merge a boundary
// vertex, or merge a vertex with itself. Returns true on success.
inline bool blow_down(PlabicGraph& g, int mid) {
    if (g.is_boundary(mid) || g.degree(mid) != 2 || !g.arc_halfs(mid).empty()) return false;
    auto rh = g.real_halfs(mid);
    int u1 = g.head(rh[0]), u2 = g.head(rh[1]);
    if (u1 == u2 || g.is_boundary(u1) || g.is_boundary(u2)) return false;
    std::set<int> n1;
    for (int h : g.vs[u1].rot)
        if (!g.hs[h].arc) n1.insert(g.head(h));
    for (int h : g.vs[u2].rot)
        if (!g.hs[h].arc && h != PlabicGraph::twin(rh[1]) && n1.count(g.head(h)))
            return false; // parallel edge (lens) would appear
    // splice u2's other edges into u1 at the slot pointing to mid
    int slot1 = g.rot_index(u1, PlabicGraph::twin(rh[0]));
    auto rot2 = g.vs[u2].rot;
    size_t p2 = size_t(g.rot_index(u2, PlabicGraph::twin(rh[1])));
    std::rotate(rot2.begin(), rot2.begin() + p2, rot2.end());
    rot2.erase(rot2.begin()); // drop the half toward mid
    for (int h : rot2) g.hs[h].tail = u1;
    auto& r1 = g.vs[u1].rot;
    r1.erase(r1.begin() + slot1);
    r1.insert(r1.begin() + slot1, rot2.begin(), rot2.end());
    g.vs[u2].rot.clear();
    g.vs[u2].alive = false;
    g.kill_edge(rh[0]);
    g.kill_edge(rh[1]);
    g.vs[mid].alive = false;
    return true;
}

// Blow down every eligible degree-2 internal vertex (keeps graphs small
// after repeated quad moves).
inline void reduce(PlabicGraph& g) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t v = 0; v < g.vs.size(); ++v)
            if (g.vs[v].alive && !g.is_boundary(v) && g.degree(v) == 2 && blow_down(g, int(v)))
                changed = true;
    }
}

// Urban renewal on an internal quadrilateral face (given by face index of a
// labelling of g). Corners of degree > 3 are first normalized by blow-ups.
inline void quad_move(PlabicGraph& g, const std::vector<int>& face_cycle) {
    if (face_cycle.size() != 4) throw std::invalid_argument("quad move: face is not quadrilateral");
    for (int h : face_cycle)
        if (g.hs[h].arc) throw std::invalid_argument("quad move: face touches the boundary");
    std::vector<int> cyc_ = face_cycle;
    int v[4];
    for (int t = 0; t < 4; ++t) {
        v[t] = g.hs[cyc_[t]].tail;
        if (g.vs[v[t]].col == g.vs[g.hs[cyc_[(t + 1) % 4]].tail].col)
            throw std::invalid_argument("quad move: face colors do not alternate");
    }
    int vp[4];
    for (int t = 0; t < 4; ++t)
        vp[t] = g.new_vertex(g.vs[v[t]].col == Color::black ? Color::white : Color::black, 0,
                             0.75 * g.vs[v[t]].x + 0.25 * g.vs[v[(t + 2) % 4]].x,
                             0.75 * g.vs[v[t]].y + 0.25 * g.vs[v[(t + 2) % 4]].y);
    int spoke[4], square[4];
    for (int t = 0; t < 4; ++t) spoke[t] = g.add_edge(v[t], vp[t]);
    for (int t = 0; t < 4; ++t) square[t] = g.add_edge(vp[t], vp[(t + 1) % 4]);
    for (int t = 0; t < 4; ++t) {
        // the outgoing face edge sits immediately before the twin of the
        // incoming one in rot; swap the pair for the spoke in place, so arcs
        // and any further edges at the corner stay where they were
        auto& rot = g.vs[v[t]].rot;
        size_t pos = size_t(g.rot_index(v[t], cyc_[t]));
        rot[pos] = spoke[t];
        size_t pin = size_t(g.rot_index(v[t], PlabicGraph::twin(cyc_[(t + 3) % 4])));
        rot.erase(rot.begin() + pin);
        // face cycle ran CCW, so at vp[t] the CCW order is [to v, to next', to prev']
        g.vs[vp[t]].rot = {PlabicGraph::twin(spoke[t]), square[t],
                           PlabicGraph::twin(square[(t + 3) % 4])};
    }
    for (int t = 0; t < 4; ++t) g.kill_edge(cyc_[t]);
    g.check_consistency();
}

// Locate an internal quadrilateral face by its label and apply the move.
// Returns the label the face acquires (checked against quad_target by tests).
inline KSubset quad_move_at(PlabicGraph& g, const KSubset& target_label, bool do_reduce = true) {
    reduce(g);
    FaceLabeling L = compute_face_labels(g);
    int fi = L.face_by_label(target_label);
    if (fi < 0) throw std::invalid_argument("quad move: no face with that label");
    quad_move(g, L.faces.cycles[fi]);
    if (do_reduce) reduce(g);
    FaceLabeling L2 = compute_face_labels(g);
    std::set<KSubset> before(L.label.begin(), L.label.end());
    for (auto& s : L2.label)
        if (!s.empty() && !before.count(s)) return s;
    throw std::logic_error("quad move: label set unchanged");
}

// Labels of internal quadrilateral faces where a quad move applies.
inline std::vector<KSubset> quad_movable_faces(const PlabicGraph& g0) {
    PlabicGraph g = g0;
    reduce(g);
    FaceLabeling L = compute_face_labels(g);
    std::vector<KSubset> out;
    for (size_t i = 0; i < L.faces.cycles.size(); ++i) {
        auto& c = L.faces.cycles[i];
        if (c.size() != 4 || !face_is_internal(g, c)) continue;
        bool alt = true;
        for (int t = 0; t < 4; ++t)
            if (g.vs[g.hs[c[t]].tail].col == g.vs[g.hs[c[(t + 1) % 4]].tail].col) alt = false;
        if (alt) out.push_back(L.label[i]);
    }
    return out;
}

} // namespace ptd
