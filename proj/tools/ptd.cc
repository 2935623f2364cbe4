// Command-line front end: constructions, moves, dimer enumeration, quiver
// extraction, verification sweeps, DOT export.
//
// Exit codes: 0 success, 2 counterexample found, 3 bad input.

#include "ptd/io.hpp"
#include "ptd/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>

using namespace ptd;

namespace {

// Labels are written "124" (single digits) or dot-separated "2.11.13".
KSubset parse_subset(const std::string& s, int n) {
    std::vector<int> v;
    if (s.find('.') != std::string::npos) {
        std::istringstream is(s);
        std::string tok;
        while (std::getline(is, tok, '.')) v.push_back(std::stoi(tok));
    } else {
        for (char c : s) {
            if (!isdigit(c)) throw std::invalid_argument("bad subset token: " + s);
            v.push_back(c - '0');
        }
    }
    return make_subset(v, n);
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    return json::parse(in);
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty()) {
        std::cout << text;
        if (text.empty() || text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream os(out);
        os << text;
    }
}

void log_line(const std::string& logfile, const json& j) {
    if (logfile.empty()) return;
    std::ofstream os(logfile, std::ios::app);
    os << j.dump() << '\n';
}

json report_to_json(const VerificationReport& r) {
    // wall time deliberately omitted: reports must be byte-identical per seed
    json j{{"suite", r.suite}, {"k", r.k}, {"n", r.n},
           {"checked", r.checked}, {"passed", r.passed}};
    if (!r.counterexample.empty()) j["counterexample"] = r.counterexample;
    return j;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"twisted Plucker coordinates as dimer partition functions"};
    app.require_subcommand(1);

    int k = 0, n = 0, points = 20, nrandom = 0;
    uint64_t seed = 0;
    bool star = false, want_quiver = false;
    std::string in, out, logfile, subset_arg, script;

    auto* c_reg = app.add_subcommand("regular", "build the regular graph (or its star) with labels");
    c_reg->add_option("--k", k)->required();
    c_reg->add_option("--n", n)->required();
    c_reg->add_flag("--star", star);
    c_reg->add_option("--out", out);

    auto* c_moves = app.add_subcommand("moves", "apply quadrilateral moves");
    c_moves->add_option("--in", in)->required();
    c_moves->add_option("--script", script, "comma-separated face labels, e.g. 124,134");
    c_moves->add_option("--random", nrandom, "apply this many random moves");
    c_moves->add_option("--seed", seed);
    c_moves->add_option("--out", out);

    auto* c_labels = app.add_subcommand("labels", "recompute face labels");
    c_labels->add_option("--in", in)->required();
    c_labels->add_option("--out", out);

    auto* c_dimers = app.add_subcommand("dimers", "enumerate dimer configurations of G_P(I)");
    c_dimers->add_option("--in", in)->required();
    c_dimers->add_option("--subset", subset_arg)->required();
    c_dimers->add_option("--out", out);

    auto* c_quiver = app.add_subcommand("quiver", "extract the face-label quiver");
    c_quiver->add_option("--in", in)->required();
    c_quiver->add_option("--out", out);

    auto* c_dot = app.add_subcommand("export-dot", "DOT rendering of a graph (or its quiver)");
    c_dot->add_option("--in", in)->required();
    c_dot->add_flag("--quiver", want_quiver);
    c_dot->add_option("--out", out);

    auto* c_verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    c_verify->add_option("suite", suite, "main|twist2|bfz|condensation|moves|formula")->required();
    c_verify->add_option("--k", k)->required();
    c_verify->add_option("--n", n)->required();
    c_verify->add_option("--points", points);
    c_verify->add_option("--seed", seed);
    c_verify->add_option("--out", out);
    c_verify->add_option("--log", logfile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*c_reg) {
            PlabicGraph g = star ? build_regular_star(k, n) : build_regular(k, n);
            emit(out, labeled_graph_to_json(g).dump(2));
        } else if (*c_moves) {
            PlabicGraph g = graph_from_json(load_json(in));
            if (!script.empty()) {
                std::istringstream is(script);
                std::string tok;
                while (std::getline(is, tok, ',')) quad_move_at(g, parse_subset(tok, g.n), true);
            }
            std::mt19937_64 rng(seed);
            for (int t = 0; t < nrandom; ++t) {
                auto faces = quad_movable_faces(g);
                if (faces.empty()) break;
                quad_move_at(g, faces[rng() % faces.size()], true);
            }
            emit(out, labeled_graph_to_json(g).dump(2));
        } else if (*c_labels) {
            PlabicGraph g = graph_from_json(load_json(in));
            FaceLabeling L = compute_face_labels(g);
            emit(out, labeling_to_json(g, L).dump(2));
        } else if (*c_dimers) {
            PlabicGraph g = graph_from_json(load_json(in));
            KSubset I = parse_subset(subset_arg, g.n);
            DimerSetup D = remove_boundary(g, I);
            auto matchings = enumerate_dimers(D.g);
            json jm = json::array();
            for (auto& m : matchings)
                jm.push_back({{"edges", m},
                              {"weight", monomial_to_json(matching_weight(D, m))}});
            json j{{"subset", subset_to_json(I)},
                   {"matchings", jm},
                   {"partition_function", polynomial_to_json(partition_function(D))},
                   {"scaled_partition_function",
                    polynomial_to_json(scaled_partition_function(D))}};
            emit(out, j.dump(2));
        } else if (*c_quiver) {
            PlabicGraph g = graph_from_json(load_json(in));
            Quiver Q = extract_quiver(g);
            json jv = json::array();
            for (size_t i = 0; i < Q.verts.size(); ++i)
                jv.push_back({{"label", subset_to_json(Q.verts[i])}, {"frozen", bool(Q.frozen[i])}});
            emit(out, json{{"vertices", jv}, {"b", Q.b}}.dump(2));
        } else if (*c_dot) {
            PlabicGraph g = graph_from_json(load_json(in));
            emit(out, want_quiver ? quiver_to_dot(extract_quiver(g)) : graph_to_dot(g));
        } else if (*c_verify) {
            VerificationReport r;
            if (suite == "main")
                r = verify_main(k, n, points, seed);
            else if (suite == "twist2")
                r = verify_twist2(k, n, points, seed);
            else if (suite == "bfz")
                r = verify_bfz(k, n, points, seed);
            else if (suite == "condensation")
                r = verify_condensation(k, n, points, seed);
            else if (suite == "moves")
                r = verify_moves(k, n, points, seed);
            else if (suite == "formula")
                r = verify_formula(k, n, points, seed);
            else
                throw std::invalid_argument("unknown suite: " + suite);
            json j = report_to_json(r);
            emit(out, j.dump(2));
            log_line(logfile, j);
            return r.ok() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
