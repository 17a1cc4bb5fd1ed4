#ifndef MNGRAPH_VERIFICATION_HPP
#define MNGRAPH_VERIFICATION_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mngraph/catalog.hpp"
#include "mngraph/constructions.hpp"
#include "mngraph/error.hpp"
#include "mngraph/graph.hpp"
#include "mngraph/random.hpp"
#include "mngraph/recognizers.hpp"
#include "mngraph/seeing.hpp"
#include "mngraph/solvers.hpp"

namespace mngraph {

/// How strongly a record supports its claim.
enum class CheckKind {
    exact,         // a computed quantity equals a stated one
    construction,  // equality attained by a built witness
    spot_check,    // an upper bound checked on witnesses or samples only
    exhaustive,    // a finite statement checked by complete search
    property,      // an invariant checked over a corpus
};

inline std::string_view kind_name(CheckKind kind) {
    switch (kind) {
        case CheckKind::exact: return "exact";
        case CheckKind::construction: return "construction-verified";
        case CheckKind::spot_check: return "bound-spot-checked";
        case CheckKind::exhaustive: return "exhaustive";
        case CheckKind::property: return "property";
    }
    return "unknown";
}

struct CheckRecord {
    std::string suite;
    std::string check;
    std::string claim;  // human-readable statement
    std::string claimed;
    std::string computed;
    bool pass = false;
    CheckKind kind = CheckKind::exact;
    double seconds = 0.0;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> records;

    bool passed() const {
        return std::all_of(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
    }

    /// `suite/check: claimed=... computed=... PASS|FAIL [kind]` per record,
    /// then a summary line.
    std::string to_text(bool timings = false) const {
        std::string out;
        for (const CheckRecord& r : records) {
            out += r.suite + "/" + r.check + ": claimed=" + r.claimed + " computed=" + r.computed + " " +
                   (r.pass ? "PASS" : "FAIL") + " [" + std::string(kind_name(r.kind)) + "]";
            if (timings) out += " seconds=" + format_seconds(r.seconds);
            out += "\n";
        }
        const auto good = std::count_if(records.begin(), records.end(), [](const CheckRecord& r) { return r.pass; });
        out += suite + ": " + (passed() ? "PASS" : "FAIL") + " (" + std::to_string(good) + "/" +
               std::to_string(records.size()) + " checks, seed " + std::to_string(seed) + ")\n";
        return out;
    }

    static constexpr std::string_view tsv_header = "suite\tcheck\tkind\tclaim\tclaimed\tcomputed\tresult\tseed";

    /// Tab-separated, one record per line after tsv_header (plus a
    /// trailing `seconds` column when timings are requested).
    std::string to_tsv(bool timings = false) const {
        std::string out(tsv_header);
        if (timings) out += "\tseconds";
        out += "\n";
        for (const CheckRecord& r : records) {
            out += r.suite + "\t" + r.check + "\t" + std::string(kind_name(r.kind)) + "\t" + r.claim + "\t" +
                   r.claimed + "\t" + r.computed + "\t" + (r.pass ? "PASS" : "FAIL") + "\t" + std::to_string(seed);
            if (timings) out += "\t" + format_seconds(r.seconds);
            out += "\n";
        }
        return out;
    }

    static std::string format_seconds(double s) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", s);
        return buf;
    }
};

struct Alphabet {
    int m = 0;
    int n = 0;

    int p() const { return 2 * m + n; }
    std::string name() const { return "(" + std::to_string(m) + "," + std::to_string(n) + ")"; }
    friend bool operator==(const Alphabet&, const Alphabet&) = default;
};

struct SuiteOptions {
    std::uint64_t seed = 0;
    int threads = 1;
    Limits limits;
    std::vector<Alphabet> alphabets;  // empty: the suite's default list
    int catalog_max_vertices = 9;     // vizing suite
    int random_samples = 500;         // bounds suite; subcubic uses a fifth per alphabet
    int labelings_per_graph = 25;     // lemma1 suite
};

inline void reject_excluded(int m, int n) {
    if (m < 0 || n < 0) throw InputError("m and n must be non-negative");
    if (m == 0 && n == 1) throw InputError("(m,n) = (0,1) is excluded from every bound");
    if (m == 0 && n == 0) throw InputError("(m,n) = (0,0) admits no adjacency types");
}

namespace detail {

inline std::vector<Alphabet> default_alphabets() { return {{1, 0}, {0, 2}, {1, 1}, {2, 0}, {0, 3}}; }

inline std::vector<Alphabet> select_alphabets(const SuiteOptions& options, std::vector<Alphabet> fallback) {
    std::vector<Alphabet> list = options.alphabets.empty() ? std::move(fallback) : options.alphabets;
    for (const Alphabet& a : list) reject_excluded(a.m, a.n);
    return list;
}

/// Appends records and times them.
class Recorder {
public:
    explicit Recorder(VerificationReport& report) : report_(report) {}

    void add(std::string check, CheckKind kind, std::string claim, const std::function<std::string()>& compute,
             const std::string& claimed) {
        add_if(std::move(check), kind, std::move(claim), claimed, [&](std::string& computed) {
            computed = compute();
            return computed == claimed;
        });
    }

    /// `judge` fills in the computed text and returns the verdict.
    void add_if(std::string check, CheckKind kind, std::string claim, std::string claimed,
                const std::function<bool(std::string&)>& judge) {
        CheckRecord r;
        r.suite = report_.suite;
        r.check = std::move(check);
        r.claim = std::move(claim);
        r.claimed = std::move(claimed);
        r.kind = kind;
        const auto start = std::chrono::steady_clock::now();
        r.pass = judge(r.computed);
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report_.records.push_back(std::move(r));
    }

private:
    VerificationReport& report_;
};

inline std::string yes_no(bool b) { return b ? "true" : "false"; }

inline std::string girth_text(const std::optional<int>& g) { return g ? std::to_string(*g) : "acyclic"; }

/// Same graph over a larger edge alphabet (m unchanged, labels kept).
inline MixedGraph widen(const MixedGraph& g, int m, int n) {
    MixedGraph out(m, n, g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (const Neighbor& nb : g.neighbors(u)) {
            if (u < nb.vertex) out.add_adjacency(u, nb.vertex, nb.label);
        }
    }
    return out;
}

/// Standard witness checks for a built graph claimed to realize `value`.
inline void witness_checks(Recorder& rec, const std::string& prefix, const MixedGraph& g, int order,
                           bool absolute, int relative_value) {
    rec.add(prefix + "/order", CheckKind::exact, "witness order", [&] { return std::to_string(g.vertex_count()); },
            std::to_string(order));
    if (absolute) {
        rec.add(prefix + "/omega_a", CheckKind::construction, "witness is an absolute clique of this order",
                [&] { return std::to_string(absolute_clique_number(g).value); }, std::to_string(order));
    }
    if (relative_value > 0) {
        rec.add(prefix + "/omega_r", CheckKind::spot_check, "relative clique number of the witness",
                [&] { return std::to_string(relative_clique_number(g).value); }, std::to_string(relative_value));
    }
}

inline int subcubic_claim(Alphabet a) {
    if (a.m == 1 && a.n == 0) return 7;
    if (a.m == 0 && (a.n == 2 || a.n == 3)) return 8;
    return 10;  // (1,1) and every alphabet with 2m+n >= 4
}

/// A (1,0)-absolute clique on 7 vertices with maximum degree 3, found by
/// labeling search over the graph catalog.
inline std::optional<MixedGraph> find_subcubic_witness(int m, int n, int order, const SearchOptions& options) {
    for (const UnderlyingGraph& u : enumerate_graphs(order, {true, 3})) {
        const auto d = diameter(u);
        if (!d || *d > 2) continue;
        const SearchOutcome s = labeling_search(u, m, n, Objective::absolute, options);
        if (s.best_value == order) return apply_labeling(u, m, n, s.best_labeling);
    }
    return std::nullopt;
}

}  // namespace detail

/// omega_a <= omega_r <= chi on a single graph.
inline CheckRecord verify_sandwich(const MixedGraph& g, const Limits& limits = {}) {
    const int a = absolute_clique_number(g).value;
    const int r = relative_clique_number(g).value;
    const int chi = chromatic_number(g, limits).value;
    CheckRecord out;
    out.suite = "single";
    out.check = "sandwich";
    out.claim = "omega_a <= omega_r <= chi";
    out.claimed = "omega_a<=omega_r<=chi";
    out.computed = std::to_string(a) + "<=" + std::to_string(r) + "<=" + std::to_string(chi);
    out.pass = a <= r && r <= chi;
    out.kind = CheckKind::property;
    return out;
}

/// The seeing-graph degeneracy bound floor((p-1) Delta^2 / p) + Delta.
inline long long degeneracy_bound(int p, int delta) {
    return static_cast<long long>(p - 1) * delta * delta / p + delta;
}

inline CheckRecord verify_degeneracy_bound(const MixedGraph& g) {
    reject_excluded(g.m(), g.n());
    const int delta = g.max_degree();
    const long long bound = degeneracy_bound(g.type_count(), delta);
    const int value = degeneracy(seeing_graph(g).graph()).value;
    CheckRecord out;
    out.suite = "single";
    out.check = "degeneracy";
    out.claim = "degeneracy of the seeing graph <= floor((p-1)Delta^2/p)+Delta";
    out.claimed = "<=" + std::to_string(bound);
    out.computed = std::to_string(value);
    out.pass = value <= bound;
    out.kind = CheckKind::property;
    return out;
}

inline CheckRecord verify_max_degree_cap(const MixedGraph& g) {
    const int delta = g.max_degree();
    const long long cap = static_cast<long long>(delta) * delta + 1;
    const int value = relative_clique_number(g).value;
    CheckRecord out;
    out.suite = "single";
    out.check = "degree-cap";
    out.claim = "omega_r <= Delta^2+1";
    out.claimed = "<=" + std::to_string(cap);
    out.computed = std::to_string(value);
    out.pass = value <= cap;
    out.kind = CheckKind::property;
    return out;
}

/// Trees: the star realizes p+1; the upper bound is spot-checked by
/// exhaustive labeling of every tree on at most 7 vertices.
inline VerificationReport verify_trees(const SuiteOptions& options = {}) {
    VerificationReport report{"trees", options.seed, {}};
    detail::Recorder rec(report);
    SearchOptions search{options.limits, options.threads, true};
    const auto trees = [] {
        std::vector<UnderlyingGraph> out;
        for (int k = 2; k <= 7; ++k) {
            for (UnderlyingGraph& g : enumerate_graphs(k)) {
                if (g.edge_count() == k - 1) out.push_back(std::move(g));
            }
        }
        return out;
    }();
    for (const Alphabet a : detail::select_alphabets(options, detail::default_alphabets())) {
        const int claim = a.p() + 1;
        const MixedGraph star = build_star(a.m, a.n);
        detail::witness_checks(rec, a.name() + "/star", star, claim, true, claim);
        rec.add_if(a.name() + "/trees-upto-7", CheckKind::spot_check,
                   "omega_r <= p+1 over all labelings of all trees on <= 7 vertices", "<=" + std::to_string(claim),
                   [&](std::string& computed) {
                       int best = 0;
                       for (const UnderlyingGraph& t : trees) {
                           best = std::max(best, labeling_search(t, a.m, a.n, Objective::relative, search).best_value);
                       }
                       computed = std::to_string(best);
                       return best <= claim;
                   });
    }
    return report;
}

/// Maximum degree 3: values 7, 8 or 10 depending on the alphabet.
///
/// An absolute clique has diameter <= 2 and at most Delta^2+1 = 10
/// vertices, so whenever the claim is below 10 it is confirmed outright by
/// labeling every connected subcubic diameter-2 graph on claim+1..10
/// vertices.
inline VerificationReport verify_subcubic(const SuiteOptions& options = {}) {
    VerificationReport report{"subcubic", options.seed, {}};
    detail::Recorder rec(report);
    SearchOptions search{options.limits, options.threads, true};
    search.limits.max_search_edges = std::max(search.limits.max_search_edges, 15);
    const UnderlyingGraph petersen = petersen_graph();
    Rng rng(options.seed);

    for (const Alphabet a : detail::select_alphabets(options, detail::default_alphabets())) {
        const int claim = detail::subcubic_claim(a);
        std::optional<MixedGraph> witness;
        if (claim == 10) {
            witness = (a.m == 1 && a.n == 1) ? build_petersen_11() : build_from_diameter2(petersen, a.m, a.n);
        } else if (claim == 8) {
            witness = detail::widen(build_wagner_02(), a.m, a.n);
        } else {
            witness = detail::find_subcubic_witness(a.m, a.n, claim, search);
        }
        if (!witness) {
            rec.add(a.name() + "/witness", CheckKind::construction, "a subcubic witness exists",
                    [] { return std::string("none"); }, "found");
            continue;
        }
        rec.add(a.name() + "/witness-max-degree", CheckKind::exact, "witness is subcubic",
                [&] { return std::to_string(witness->max_degree()); }, "3");
        detail::witness_checks(rec, a.name() + "/witness", *witness, claim, true, claim);
        const int samples = std::max(1, options.random_samples / 5);
        rec.add_if(a.name() + "/samples", CheckKind::spot_check,
                   "omega_r <= " + std::to_string(claim) + " and <= Delta^2+1 on " + std::to_string(samples) +
                       " random subcubic graphs",
                   "0", [&](std::string& computed) {
                       int bad = 0;
                       for (int i = 0; i < samples; ++i) {
                           const int vertices = rng.between(2, 12);
                           const int permille =
                               rng.between(50, std::max(60, std::min(900, 3000 / std::max(1, vertices - 1))));
                           const MixedGraph g =
                               random_mixed_graph(rng, random_graph_max_degree(rng, vertices, permille, 3), a.m, a.n);
                           bad += relative_clique_number(g).value > claim || !verify_max_degree_cap(g).pass;
                       }
                       computed = std::to_string(bad);
                       return bad == 0;
                   });
        if (claim < 10) {
            int graphs = 0;
            rec.add_if(a.name() + "/no-larger-absolute-clique", CheckKind::exhaustive,
                       "no absolute clique with Delta <= 3 on " + std::to_string(claim + 1) + "..10 vertices",
                       "none", [&](std::string& computed) {
                           int found = 0;
                           for (int k = claim + 1; k <= 10; ++k) {
                               for (const UnderlyingGraph& u : enumerate_graphs(k, {true, 3})) {
                                   const auto d = diameter(u);
                                   if (!d || *d > 2) continue;
                                   ++graphs;
                                   if (labeling_search(u, a.m, a.n, Objective::absolute, search).best_value == k) ++found;
                               }
                           }
                           computed = found == 0 ? "none" : std::to_string(found);
                           return found == 0;
                       });
            report.records.back().claim += " (" + std::to_string(graphs) + " diameter-2 graphs searched)";
        }
    }
    rec.add("petersen-3-edge-coloring", CheckKind::exhaustive, "the Petersen graph has no proper 3-edge-coloring",
            [&] { return find_proper_edge_coloring(petersen, 3) ? std::string("found") : std::string("none"); },
            "none");
    return report;
}

namespace detail {

/// Girth >= 5 witness for max(p+1, 5); nullopt for (0,2).
inline std::optional<MixedGraph> girth5_absolute_witness(Alphabet a) {
    if (a.p() >= 4) return build_star(a.m, a.n);
    if (a.m == 1 && a.n == 0) return build_directed_c5();
    if (a.p() == 3) return build_from_diameter2(cycle_graph(5), a.m, a.n);
    return std::nullopt;
}

inline bool girth_at_least(const UnderlyingGraph& u, int g) {
    const auto value = girth(u);
    return !value || *value >= g;
}

}  // namespace detail

/// Partial 2-trees by girth: the extremal constructions for girth 3 and 4,
/// the 5-cycle witnesses for girth 5, and the star for girth >= 6.
inline VerificationReport verify_partial2tree(const SuiteOptions& options = {}) {
    VerificationReport report{"partial2tree", options.seed, {}};
    detail::Recorder rec(report);
    SearchOptions search{options.limits, options.threads, true};
    for (const Alphabet a : detail::select_alphabets(options, detail::default_alphabets())) {
        const int p = a.p();
        auto family = [&](const std::string& prefix, const MixedGraph& g, int min_girth) {
            const UnderlyingGraph u = underlying(g);
            rec.add(prefix + "/partial-2-tree", CheckKind::exact, "witness is K4-minor-free",
                    [&] { return detail::yes_no(is_partial_2_tree(u)); }, "true");
            rec.add(prefix + "/girth", CheckKind::exact, "witness girth is at least " + std::to_string(min_girth),
                    [&] { return detail::yes_no(detail::girth_at_least(u, min_girth)); }, "true");
        };

        const MixedGraph g3 = build_partial2tree_extremal(a.m, a.n);
        const int c3 = p * p + p + 1;
        detail::witness_checks(rec, a.name() + "/girth3", g3, c3, true, c3);
        family(a.name() + "/girth3", g3, 3);
        rec.add(a.name() + "/girth3/girth-exact", CheckKind::exact, "girth of the witness",
                [&] { return detail::girth_text(girth(underlying(g3))); }, "3");

        const MixedGraph g4 = build_trianglefree_extremal(a.m, a.n);
        const int c4 = p * p + 2;
        detail::witness_checks(rec, a.name() + "/girth4", g4, c4, true, c4);
        family(a.name() + "/girth4", g4, 4);
        rec.add(a.name() + "/girth4/girth-exact", CheckKind::exact, "girth of the witness",
                [&] { return detail::girth_text(girth(underlying(g4))); }, "4");

        if (const auto g5 = detail::girth5_absolute_witness(a)) {
            const int c5 = std::max(p + 1, 5);
            detail::witness_checks(rec, a.name() + "/girth5", *g5, c5, true, c5);
            family(a.name() + "/girth5", *g5, 5);
        } else {
            const MixedGraph star = build_star(a.m, a.n);
            detail::witness_checks(rec, a.name() + "/girth5-absolute", star, 3, true, 0);
            family(a.name() + "/girth5-absolute", star, 5);
            const MixedGraph c5 = build_c5_02();
            rec.add(a.name() + "/girth5-relative/omega_r", CheckKind::construction, "labeled 5-cycle reaches 4",
                    [&] { return std::to_string(relative_clique_number(c5).value); }, "4");
            family(a.name() + "/girth5-relative", c5, 5);
            rec.add(a.name() + "/c5-absolute-search", CheckKind::exhaustive,
                    "no labeling of the 5-cycle is an absolute clique beyond 3",
                    [&] {
                        return std::to_string(
                            labeling_search(cycle_graph(5), a.m, a.n, Objective::absolute, search).best_value);
                    },
                    "3");
        }

        const MixedGraph star = build_star(a.m, a.n);
        detail::witness_checks(rec, a.name() + "/girth6", star, p + 1, true, p + 1);
        family(a.name() + "/girth6", star, 6);
    }
    return report;
}

/// Planar graphs by girth. Girth 3 has no construction here; girth 5 omits
/// the absolute value for (0,2) and the relative value for 2m+n = 2, and
/// girth 6 checks the relative value only for 2m+n >= 3.
inline VerificationReport verify_planar(const SuiteOptions& options = {}) {
    VerificationReport report{"planar", options.seed, {}};
    detail::Recorder rec(report);
    for (const Alphabet a : detail::select_alphabets(options, detail::default_alphabets())) {
        const int p = a.p();
        auto family = [&](const std::string& prefix, const MixedGraph& g, int min_girth) {
            const UnderlyingGraph u = underlying(g);
            rec.add(prefix + "/planar", CheckKind::exact, "witness is planar",
                    [&] { return detail::yes_no(is_planar(u)); }, "true");
            rec.add(prefix + "/girth", CheckKind::exact, "witness girth is at least " + std::to_string(min_girth),
                    [&] { return detail::yes_no(detail::girth_at_least(u, min_girth)); }, "true");
        };

        const MixedGraph g4 = build_trianglefree_extremal(a.m, a.n);
        detail::witness_checks(rec, a.name() + "/girth4", g4, p * p + 2, true, 0);
        family(a.name() + "/girth4", g4, 4);

        if (const auto g5 = detail::girth5_absolute_witness(a)) {
            const int c5 = std::max(p + 1, 5);
            detail::witness_checks(rec, a.name() + "/girth5-absolute", *g5, c5, true, 0);
            family(a.name() + "/girth5-absolute", *g5, 5);
        }
        if (p >= 3) {
            const int c5r = std::max(p + 1, 6);
            const MixedGraph g5r = p + 1 >= 6 ? build_star(a.m, a.n) : build_girth5_planar_six(a.m, a.n);
            rec.add(a.name() + "/girth5-relative/omega_r", CheckKind::construction,
                    "witness reaches max(p+1,6) pairwise-seeing vertices",
                    [&] { return std::to_string(relative_clique_number(g5r).value); }, std::to_string(c5r));
            family(a.name() + "/girth5-relative", g5r, 5);
        }

        const MixedGraph star = build_star(a.m, a.n);
        detail::witness_checks(rec, a.name() + "/girth6", star, p + 1, true, p >= 3 ? p + 1 : 0);
        family(a.name() + "/girth6", star, 6);
        detail::witness_checks(rec, a.name() + "/girth7", star, p + 1, true, p + 1);
        family(a.name() + "/girth7", star, 7);
    }
    return report;
}

/// Seeing against the partition oracle on every connected graph with 2..5
/// vertices under seeded random labelings; also compares the relative clique
/// number with the largest set of pairwise non-mergeable vertices.
inline VerificationReport verify_lemma1_equivalence(const SuiteOptions& options = {}) {
    VerificationReport report{"lemma1", options.seed, {}};
    detail::Recorder rec(report);
    std::vector<UnderlyingGraph> corpus;
    for (int k = 2; k <= 5; ++k) {
        for (UnderlyingGraph& g : enumerate_graphs(k)) corpus.push_back(std::move(g));
    }
    Rng rng(options.seed);
    for (const Alphabet a : detail::select_alphabets(options, {{1, 1}, {0, 2}})) {
        std::vector<MixedGraph> graphs;
        for (const UnderlyingGraph& u : corpus) {
            for (int i = 0; i < options.labelings_per_graph; ++i) graphs.push_back(random_mixed_graph(rng, u, a.m, a.n));
        }
        long long pairs = 0;
        rec.add_if(a.name() + "/pairs", CheckKind::exhaustive, "sees(u,v) == !mergeable(u,v) on every pair", "0",
                   [&](std::string& computed) {
                       long long bad = 0;
                       for (const MixedGraph& g : graphs) {
                           for (Vertex u = 0; u < g.vertex_count(); ++u) {
                               for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                                   ++pairs;
                                   const bool merge =
                                       mergeable_oracle(g, u, v, options.limits.max_partition_vertices);
                                   if (sees(g, u, v) == merge) ++bad;
                               }
                           }
                       }
                       computed = std::to_string(bad);
                       return bad == 0;
                   });
        report.records.back().claim += " (" + std::to_string(graphs.size()) + " graphs, " + std::to_string(pairs) +
                                       " pairs)";
        rec.add_if(a.name() + "/sets", CheckKind::exhaustive,
                   "omega_r equals the largest pairwise non-mergeable set", "0", [&](std::string& computed) {
                       long long bad = 0;
                       for (const MixedGraph& g : graphs) {
                           const int n = g.vertex_count();
                           std::vector<std::uint32_t> apart(n, 0);
                           for (Vertex u = 0; u < n; ++u) {
                               for (Vertex v = 0; v < n; ++v) {
                                   if (u != v && !mergeable_oracle(g, u, v, options.limits.max_partition_vertices)) {
                                       apart[u] |= 1u << v;
                                   }
                               }
                           }
                           int best = 0;
                           for (std::uint32_t s = 1; s < (1u << n); ++s) {
                               bool ok = true;
                               for (Vertex u = 0; u < n && ok; ++u) {
                                   if ((s >> u) & 1u) ok = (s & ~(1u << u) & ~apart[u]) == 0;
                               }
                               if (ok) best = std::max(best, __builtin_popcount(s));
                           }
                           if (best != relative_clique_number(g).value) ++bad;
                       }
                       computed = std::to_string(bad);
                       return bad == 0;
                   });
    }
    return report;
}

/// Bound properties on seeded Erdos-Renyi graphs (2..12 vertices,
/// Delta <= 6, uniform labelings); chi is computed on the graphs with at most
/// 8 vertices.
inline VerificationReport verify_bounds(const SuiteOptions& options = {}) {
    VerificationReport report{"bounds", options.seed, {}};
    detail::Recorder rec(report);
    const auto alphabets = detail::select_alphabets(options, {{1, 1}, {0, 2}});
    Rng rng(options.seed);
    std::vector<MixedGraph> samples;
    for (int i = 0; i < options.random_samples; ++i) {
        const Alphabet a = alphabets[rng.below(alphabets.size())];
        const int vertices = rng.between(2, 12);
        const int target = rng.between(1, 6);
        const int top = std::max(60, std::min(900, 1000 * target / (vertices - 1)));
        const int permille = rng.between(50, std::max(50, top));
        const UnderlyingGraph u = random_graph_max_degree(rng, vertices, permille, target);
        samples.push_back(random_mixed_graph(rng, u, a.m, a.n));
    }
    const int chi_limit = std::min(8, options.limits.max_partition_vertices);
    const std::string corpus = std::to_string(samples.size()) + " samples";

    rec.add_if("sandwich", CheckKind::property, "omega_a <= omega_r on " + corpus, "0", [&](std::string& computed) {
        int bad = 0;
        for (const MixedGraph& g : samples) bad += absolute_clique_number(g).value > relative_clique_number(g).value;
        computed = std::to_string(bad);
        return bad == 0;
    });
    rec.add_if("degree-cap", CheckKind::property, "omega_r <= Delta^2+1 on " + corpus, "0",
               [&](std::string& computed) {
                   int bad = 0;
                   for (const MixedGraph& g : samples) bad += !verify_max_degree_cap(g).pass;
                   computed = std::to_string(bad);
                   return bad == 0;
               });
    rec.add_if("degeneracy", CheckKind::property,
               "degeneracy of the seeing graph <= floor((p-1)Delta^2/p)+Delta on " + corpus, "0",
               [&](std::string& computed) {
                   int bad = 0;
                   for (const MixedGraph& g : samples) bad += !verify_degeneracy_bound(g).pass;
                   computed = std::to_string(bad);
                   return bad == 0;
               });
    int small = 0;
    for (const MixedGraph& g : samples) small += g.vertex_count() <= chi_limit;
    rec.add_if("chromatic", CheckKind::property,
               "omega_r <= chi on the " + std::to_string(small) + " samples with <= " + std::to_string(chi_limit) +
                   " vertices",
               "0", [&](std::string& computed) {
                   int bad = 0;
                   for (const MixedGraph& g : samples) {
                       if (g.vertex_count() > chi_limit) continue;
                       bad += relative_clique_number(g).value > chromatic_number(g, options.limits).value;
                   }
                   computed = std::to_string(bad);
                   return bad == 0;
               });
    return report;
}

/// The constructive edge coloring on the connected graph catalog and the
/// Petersen graph, plus the exhaustive chromatic-index check of Petersen.
inline VerificationReport verify_vizing(const SuiteOptions& options = {}) {
    VerificationReport report{"vizing", options.seed, {}};
    detail::Recorder rec(report);
    auto check = [](const UnderlyingGraph& u) {
        const EdgeColoring c = build_vizing_edge_coloring(u);
        return is_proper(u, c) && c.color_count() <= u.max_degree() + 1 &&
               std::all_of(c.colors.begin(), c.colors.end(), [&](int x) { return x <= u.max_degree() + 1; });
    };
    for (int k = 1; k <= options.catalog_max_vertices; ++k) {
        rec.add_if("catalog-" + std::to_string(k), CheckKind::exhaustive,
                   "proper with <= Delta+1 colors on every connected graph with " + std::to_string(k) + " vertices",
                   "0", [&](std::string& computed) {
                       int bad = 0;
                       for (const UnderlyingGraph& u : enumerate_graphs(k)) bad += !check(u);
                       computed = std::to_string(bad);
                       return bad == 0;
                   });
    }
    const UnderlyingGraph petersen = petersen_graph();
    rec.add("petersen/proper", CheckKind::exact, "proper with <= Delta+1 colors",
            [&] { return detail::yes_no(check(petersen)); }, "true");
    rec.add("petersen/colors", CheckKind::exact, "colors used on the Petersen graph",
            [&] { return std::to_string(build_vizing_edge_coloring(petersen).color_count()); }, "4");
    rec.add("petersen/3-edge-coloring", CheckKind::exhaustive, "no proper 3-edge-coloring exists",
            [&] { return find_proper_edge_coloring(petersen, 3) ? std::string("found") : std::string("none"); },
            "none");
    return report;
}

inline std::vector<std::string> suite_names() {
    return {"trees", "subcubic", "partial2tree", "planar", "lemma1", "bounds", "vizing"};
}

/// Runs a suite by name; `all` is not handled here.
inline VerificationReport verify_theorem_suite(std::string_view id, const SuiteOptions& options = {}) {
    if (id == "trees") return verify_trees(options);
    if (id == "subcubic") return verify_subcubic(options);
    if (id == "partial2tree") return verify_partial2tree(options);
    if (id == "planar") return verify_planar(options);
    if (id == "lemma1") return verify_lemma1_equivalence(options);
    if (id == "bounds") return verify_bounds(options);
    if (id == "vizing") return verify_vizing(options);
    throw InputError("unknown suite '" + std::string(id) + "'");
}

}  // namespace mngraph

#endif  // MNGRAPH_VERIFICATION_HPP
