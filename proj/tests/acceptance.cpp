// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mngraph/cli.hpp"
#include "mngraph/mngraph.hpp"

using namespace mngraph;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

bool distinct_incident_types(const MixedGraph& g) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        std::set<int> seen;
        for (const Neighbor& nb : g.neighbors(v)) {
            if (!seen.insert(nb.label.value()).second) return false;
        }
    }
    return true;
}

bool pairwise_seeing(const MixedGraph& g, const std::vector<Vertex>& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
            if (!sees(g, s[i], s[j])) return false;
        }
    }
    return true;
}

Outcome constructions() {
    Outcome o;
    const int expected_p2t[] = {7, 7, 13, 21, 13};
    int i = 0;
    for (const auto [m, n] : std::vector<std::pair<int, int>>{{1, 0}, {0, 2}, {1, 1}, {2, 0}, {0, 3}}) {
        const int p = 2 * m + n;
        const std::string tag = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
        const MixedGraph star = build_star(m, n);
        o.require(star.vertex_count() == p + 1, tag + " star order");
        o.require(is_absolute_clique(star), tag + " star clique");
        o.require(!girth(underlying(star)).has_value(), tag + " star acyclic");

        const MixedGraph p2t = build_partial2tree_extremal(m, n);
        o.require(p2t.vertex_count() == expected_p2t[i] && p2t.vertex_count() == p * p + p + 1, tag + " p2t order");
        o.require(is_absolute_clique(p2t), tag + " p2t clique");
        o.require(is_partial_2_tree(underlying(p2t)), tag + " p2t recognizer");

        const MixedGraph tf = build_trianglefree_extremal(m, n);
        const UnderlyingGraph tu = underlying(tf);
        o.require(tf.vertex_count() == p * p + 2, tag + " triangle-free order");
        o.require(is_absolute_clique(tf), tag + " triangle-free clique");
        o.require(girth(tu) == 4, tag + " triangle-free girth");
        o.require(is_partial_2_tree(tu), tag + " triangle-free recognizer");
        ++i;
    }
    return o;
}

Outcome fixtures() {
    Outcome o;
    const MixedGraph p = build_petersen_11();
    o.require(p.vertex_count() == 10 && p.m() == 1 && p.n() == 1, "petersen shape");
    o.require(underlying(p) == petersen_graph(), "petersen underlying");
    o.require(is_absolute_clique(p), "petersen clique");
    const MixedGraph w = build_wagner_02();
    const UnderlyingGraph wu = underlying(w);
    o.require(w.vertex_count() == 8 && w.m() == 0 && w.n() == 2, "wagner shape");
    o.require(is_absolute_clique(w), "wagner clique");
    bool cubic = true;
    for (Vertex v = 0; v < 8; ++v) cubic = cubic && wu.degree(v) == 3;
    o.require(cubic, "wagner 3-regular");
    o.require(girth(wu) == 4, "wagner girth");
    return o;
}

Outcome vizing() {
    Outcome o;
    auto check = [](const UnderlyingGraph& u) {
        const EdgeColoring c = build_vizing_edge_coloring(u);
        if (!is_proper(u, c)) return false;
        for (int x : c.colors) {
            if (x > u.max_degree() + 1) return false;
        }
        return true;
    };
    long long graphs = 0;
    for (int k = 1; k <= 9; ++k) {
        for (const UnderlyingGraph& u : enumerate_graphs(k)) {
            ++graphs;
            if (!check(u)) o.require(false, "catalog graph on " + std::to_string(k) + " vertices");
        }
    }
    o.require(graphs == 1 + 1 + 2 + 6 + 21 + 112 + 853 + 11117 + 261080, "catalog size " + std::to_string(graphs));
    o.require(check(petersen_graph()), "petersen coloring");
    o.require(!find_proper_edge_coloring(petersen_graph(), 3).has_value(), "petersen 3-edge-coloring found");
    return o;
}

Outcome degree_diameter() {
    Outcome o;
    const MixedGraph a = build_from_diameter2(cycle_graph(5), 1, 1);
    const MixedGraph b = build_from_diameter2(petersen_graph(), 2, 0);
    o.require(is_absolute_clique(a), "C5 (1,1) clique");
    o.require(is_absolute_clique(b), "Petersen (2,0) clique");
    o.require(distinct_incident_types(a), "C5 incident types");
    o.require(distinct_incident_types(b), "Petersen incident types");
    return o;
}

Outcome lemma1() {
    Outcome o;
    SuiteOptions options;
    options.labelings_per_graph = 25;
    options.alphabets = {{1, 1}, {0, 2}};
    const VerificationReport r = verify_lemma1_equivalence(options);
    for (const CheckRecord& c : r.records) o.require(c.pass && c.computed == "0", c.check + " disagreements=" + c.computed);
    o.require(r.records.size() == 4, "record count");
    return o;
}

Outcome search() {
    Outcome o;
    const UnderlyingGraph c5 = cycle_graph(5);
    const auto t0 = std::chrono::steady_clock::now();
    o.require(labeling_search(c5, 0, 2, Objective::relative).best_value == 4, "C5 relative");
    o.require(labeling_search(c5, 0, 2, Objective::absolute).best_value == 3, "C5 absolute");
    const double small = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.require(small < 10.0, "C5 runs took " + std::to_string(small) + " s");
    SearchOptions raised;
    raised.limits.max_search_edges = 15;
    raised.threads = 2;
    const SearchOutcome p = labeling_search(petersen_graph(), 1, 1, Objective::absolute, raised);
    o.require(p.best_value == 10, "Petersen absolute = " + std::to_string(p.best_value));
    o.require(is_absolute_clique(apply_labeling(petersen_graph(), 1, 1, p.best_labeling)), "Petersen witness");
    return o;
}

Outcome bounds() {
    Outcome o;
    SuiteOptions options;
    options.random_samples = 500;
    options.alphabets = {{1, 1}, {0, 2}};
    const VerificationReport r = verify_bounds(options);
    for (const CheckRecord& c : r.records) o.require(c.pass, c.check + " violations=" + c.computed);
    o.require(r.records.size() == 4, "record count");
    return o;
}

Outcome girth5_planar() {
    Outcome o;
    const MixedGraph g = build_girth5_planar_six(1, 1);
    const UnderlyingGraph u = underlying(g);
    o.require(is_planar(u), "planar");
    o.require(girth(u) == 5, "girth");
    const CliqueResult r = relative_clique_number(g);
    o.require(r.value == std::max(2 * 1 + 1 + 1, 6), "omega_r = " + std::to_string(r.value));
    o.require(r.witness.size() == 6 && pairwise_seeing(g, r.witness), "witness");
    return o;
}

std::string cli_output(const std::vector<std::string>& args, int& code) {
    std::istringstream in;
    std::ostringstream out, err;
    code = cli::run(args, in, out, err);
    return out.str() + err.str();
}

Outcome determinism() {
    Outcome o;
    for (const std::string& suite : suite_names()) {
        for (const std::string& format : {"text", "tsv"}) {
            int c1 = 0, c2 = 0, c3 = 0;
            const std::string base = cli_output({"--seed", "11", "verify", suite, "--format", format}, c1);
            const std::string two =
                cli_output({"--seed", "11", "--threads", "2", "verify", suite, "--format", format}, c2);
            const std::string again = format == "tsv"
                                          ? cli_output({"--seed", "11", "--threads", "5", "verify", suite, "--format", format}, c3)
                                          : base;
            o.require(base == two && base == again, suite + " " + format + " differs");
            o.require(c1 == c2 && (format == "text" || c1 == c3), suite + " exit codes differ");
        }
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double limit_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 construction exactness", 10, constructions},
        {"2 figure fixtures", 1, fixtures},
        {"3 vizing on catalog <= 9 vertices", 60, vizing},
        {"4 degree-diameter conversion", 1, degree_diameter},
        {"5 seeing/merging equivalence", 300, lemma1},
        {"6 labeling search ground truth", 1800, search},
        {"7 bound properties", 600, bounds},
        {"8 girth-5 planar witness", 1, girth5_planar},
        {"9 determinism across thread counts", 3600, determinism},
    };
    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= c.limit_seconds) o.require(false, "time limit exceeded");
        failed += !o.ok;
        std::printf("%s criterion %s (%.2f s, limit %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.name, secs,
                    c.limit_seconds, o.detail.empty() ? "" : ": ", o.detail.c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
