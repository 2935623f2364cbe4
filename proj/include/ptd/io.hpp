#pragma once

#include "laurent.hpp"
#include "plabic.hpp"
#include "quiver.hpp"

#include <json.hpp>

#include <sstream>
#include <string>

namespace ptd {

using nlohmann::json;

inline json subset_to_json(const KSubset& s) { return json(s); }

inline KSubset subset_from_json(const json& j, int n) {
    return make_subset(j.get<std::vector<int>>(), n);
}

// Canonical graph serialization: alive vertices renumbered consecutively,
// edges listed by ascending even half id, rotations as (edge, side) codes
// with side 0 for the half leaving the stored tail. Layout coordinates are
// build-time scaffolding and are not serialized.
inline json graph_to_json(const PlabicGraph& g) {
    std::vector<int> vmap(g.vs.size(), -1);
    int nv = 0;
    for (size_t v = 0; v < g.vs.size(); ++v)
        if (g.vs[v].alive) vmap[v] = nv++;
    std::vector<int> emap(g.hs.size() / 2, -1);
    json edges = json::array();
    int ne = 0;
    for (size_t h = 0; h < g.hs.size(); h += 2) {
        if (!g.hs[h].alive) continue;
        emap[h / 2] = ne++;
        edges.push_back({{"tail", vmap[g.hs[h].tail]},
                         {"head", vmap[g.head(int(h))]},
                         {"arc", g.hs[h].arc}});
    }
    json verts = json::array();
    json rot = json::array();
    for (size_t v = 0; v < g.vs.size(); ++v) {
        if (!g.vs[v].alive) continue;
        verts.push_back({{"color", g.vs[v].col == Color::black ? "black" : "white"},
                         {"boundary", g.vs[v].bindex}});
        json r = json::array();
        for (int h : g.vs[v].rot) r.push_back(2 * emap[h / 2] + (h & 1));
        rot.push_back(r);
    }
    return {{"k", g.k}, {"n", g.n}, {"vertices", verts}, {"edges", edges}, {"rot", rot}};
}

inline PlabicGraph graph_from_json(const json& j) {
    PlabicGraph g;
    g.k = j.at("k").get<int>();
    g.n = j.at("n").get<int>();
    for (auto& jv : j.at("vertices")) {
        int v = g.new_vertex(jv.at("color").get<std::string>() == "black" ? Color::black : Color::white,
                             jv.at("boundary").get<int>(), 0, 0);
        (void)v;
    }
    for (auto& je : j.at("edges")) {
        int h = g.add_edge(je.at("tail").get<int>(), je.at("head").get<int>(), je.at("arc").get<bool>());
        (void)h;
    }
    const auto& rot = j.at("rot");
    for (size_t v = 0; v < g.vs.size(); ++v)
        for (auto& jh : rot.at(v)) g.vs[v].rot.push_back(jh.get<int>());
    g.check_consistency();
    return g;
}

inline json labeling_to_json(const PlabicGraph& g, const FaceLabeling& L) {
    json faces = json::array();
    for (size_t f = 0; f < L.faces.cycles.size(); ++f) {
        if (int(f) == L.faces.outer) continue;
        faces.push_back({{"label", subset_to_json(L.label[f])},
                         {"internal", face_is_internal(g, L.faces.cycles[f])}});
    }
    return faces;
}

inline json labeled_graph_to_json(const PlabicGraph& g) {
    json j = graph_to_json(g);
    j["faces"] = labeling_to_json(g, compute_face_labels(g));
    return j;
}

inline json monomial_to_json(const LaurentMonomial& m) {
    json pw = json::array();
    for (auto& [s, e] : m.pw) pw.push_back({{"subset", subset_to_json(s)}, {"exp", e}});
    return {{"coeff", m.coeff.get_str()}, {"powers", pw}};
}

inline json polynomial_to_json(const LaurentPolynomial& p) {
    json terms = json::array();
    for (auto& [pw, c] : p.terms) terms.push_back(monomial_to_json(LaurentMonomial(c, pw)));
    return terms;
}

inline LaurentMonomial monomial_from_json(const json& j, int n) {
    Powers pw;
    for (auto& jp : j.at("powers")) pw[subset_from_json(jp.at("subset"), n)] = jp.at("exp").get<int>();
    return LaurentMonomial(Int(j.at("coeff").get<std::string>()), std::move(pw));
}

inline LaurentPolynomial polynomial_from_json(const json& j, int n) {
    LaurentPolynomial p;
    for (auto& jt : j) p += monomial_from_json(jt, n);
    return p;
}

// DOT rendering of the graph; face labels appear as a comment block since
// faces are regions, not nodes.
inline std::string graph_to_dot(const PlabicGraph& g) {
    FaceLabeling L = compute_face_labels(g);
    std::ostringstream os;
    os << "graph plabic {\n  node [shape=circle, style=filled, fixedsize=true, width=0.25];\n";
    for (size_t v = 0; v < g.vs.size(); ++v) {
        if (!g.vs[v].alive) continue;
        os << "  v" << v;
        if (g.vs[v].bindex)
            os << " [label=\"" << g.vs[v].bindex << "\", fillcolor=lightgray, shape=square]";
        else if (g.vs[v].col == Color::black)
            os << " [label=\"\", fillcolor=black]";
        else
            os << " [label=\"\", fillcolor=white]";
        os << ";\n";
    }
    for (size_t h = 0; h < g.hs.size(); h += 2) {
        if (!g.hs[h].alive) continue;
        os << "  v" << g.hs[h].tail << " -- v" << g.head(int(h));
        if (g.hs[h].arc) os << " [style=dotted]";
        os << ";\n";
    }
    os << "  // faces:\n";
    for (size_t f = 0; f < L.faces.cycles.size(); ++f) {
        if (int(f) == L.faces.outer) continue;
        os << "  // " << subset_symbol(L.label[f])
           << (face_is_internal(g, L.faces.cycles[f]) ? " internal" : " boundary") << "\n";
    }
    os << "}\n";
    return os.str();
}

inline std::string quiver_to_dot(const Quiver& Q) {
    std::ostringstream os;
    os << "digraph quiver {\n  node [shape=box];\n";
    for (size_t i = 0; i < Q.verts.size(); ++i) {
        os << "  q" << i << " [label=\"" << subset_symbol(Q.verts[i]) << "\"";
        if (Q.frozen[i]) os << ", style=dashed";
        os << "];\n";
    }
    for (size_t i = 0; i < Q.verts.size(); ++i)
        for (size_t j = 0; j < Q.verts.size(); ++j)
            for (int t = 0; t < Q.b[i][j]; ++t) os << "  q" << i << " -> q" << j << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace ptd
