#ifndef MNGRAPH_CLI_HPP
#define MNGRAPH_CLI_HPP

// Command-line front end. Needs CLI11.hpp (vendor/) on the include path.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mngraph/mngraph.hpp"

namespace mngraph::cli {

namespace detail {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Usage("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

inline MixedGraph load(const std::string& path, std::istream& in) {
    try {
        return parse_graph(read_source(path, in));
    } catch (const ParseError& e) {
        throw ParseError(e.line(), std::string(e.what()).substr(std::string(e.what()).find(':') + 2) + " in '" +
                                       (path == "-" ? std::string("<stdin>") : path) + "'");
    }
}

inline void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Usage("cannot write '" + path + "'");
    file << text;
}

inline std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(xs[i]);
    }
    return s;
}

inline const std::vector<std::string>& build_names() {
    static const std::vector<std::string> names{
        "star",      "partial2tree_extremal", "trianglefree_extremal", "petersen_11",  "wagner_02",
        "c5_02",     "directed_c5",           "girth5_planar_six",     "from_diameter2"};
    return names;
}

}  // namespace detail

/// Runs one command line (without the program name). Returns 0 on success
/// or PASS, 1 on FAIL, 2 on usage or input errors.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact analysis of (m,n)-colored mixed graphs", "mngraph"};
    app.require_subcommand(1);
    app.fallthrough();

    std::uint64_t seed = 0;
    int threads = 1;
    Limits limits;
    app.add_option("--seed", seed, "Random seed")->capture_default_str();
    app.add_option("--threads", threads, "Worker threads for labeling search")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-partition-vertices", limits.max_partition_vertices, "Vertex limit for quotient search")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    app.add_option("--max-search-edges", limits.max_search_edges, "Edge limit for labeling search")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();

    // build
    auto* build = app.add_subcommand("build", "Write a named construction in the v1 text format");
    std::string build_name;
    int bm = -1, bn = -1;
    std::string build_out = "-";
    std::string build_input;
    bool build_underlying = false;
    build->add_option("name", build_name, "Construction name")->required()->check(CLI::IsMember(detail::build_names()));
    build->add_option("--m", bm, "Number of arc types");
    build->add_option("--n", bn, "Number of edge types");
    build->add_option("-o,--output", build_out, "Output file ('-' for stdout)");
    build->add_option("--input", build_input, "Underlying graph file (from_diameter2)");
    build->add_flag("--underlying", build_underlying, "Emit only the underlying graph");

    // check
    auto* check = app.add_subcommand("check", "Compute a parameter of one graph");
    std::string check_file;
    bool want_relative = false, want_absolute = false, want_chromatic = false, want_is_absolute = false;
    std::vector<int> sees_pair;
    check->add_option("file", check_file, "Graph file ('-' for stdin)")->required();
    auto* g_rel = check->add_flag("--relative", want_relative, "Relative clique number and witness");
    auto* g_abs = check->add_flag("--absolute", want_absolute, "Absolute clique number and witness");
    auto* g_chi = check->add_flag("--chromatic", want_chromatic, "Chromatic number and quotient blocks");
    auto* g_isa = check->add_flag("--is-absolute-clique", want_is_absolute, "Whether the graph is an absolute clique");
    auto* g_sees = check->add_option("--sees", sees_pair, "Whether u sees v")->expected(2);
    for (auto* a : {g_rel, g_abs, g_chi, g_isa, g_sees}) {
        for (auto* b : {g_rel, g_abs, g_chi, g_isa, g_sees}) {
            if (a != b) a->excludes(b);
        }
    }

    // search
    auto* search = app.add_subcommand("search", "Best labeling of an underlying graph");
    std::string search_file;
    int sm = 0, sn = 0;
    std::string objective = "relative";
    std::string search_out;
    search->add_option("file", search_file, "Graph file; only its underlying graph is used")->required();
    search->add_option("--m", sm, "Number of arc types")->required()->check(CLI::NonNegativeNumber);
    search->add_option("--n", sn, "Number of edge types")->required()->check(CLI::NonNegativeNumber);
    search->add_option("--objective", objective, "relative or absolute")
        ->check(CLI::IsMember({"relative", "absolute"}))
        ->capture_default_str();
    search->add_option("-o,--output", search_out, "Also write the best labeled graph here");

    // recognize
    auto* recognize = app.add_subcommand("recognize", "Print the family profile of the underlying graph");
    std::string recognize_file;
    recognize->add_option("file", recognize_file, "Graph file ('-' for stdin)")->required();

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    std::string format = "text";
    std::string verify_out = "-";
    bool timings = false;
    std::vector<std::string> alphabet_args;
    std::vector<std::string> suites = suite_names();
    suites.push_back("all");
    verify->add_option("suite", suite, "Suite name or 'all'")->required()->check(CLI::IsMember(suites));
    verify->add_option("--format", format, "text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}))
        ->capture_default_str();
    verify->add_option("-o,--output", verify_out, "Report file ('-' for stdout)");
    verify->add_flag("--timings", timings, "Include per-check runtimes (output then varies between runs)");
    verify->add_option("--alphabet", alphabet_args, "Alphabet M,N to check (repeatable)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
            app.exit(e, out, err);
            return 0;
        }
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*build) {
            MixedGraph g;
            auto need = [&] {
                if (bm < 0 || bn < 0) throw detail::Usage("'" + build_name + "' needs --m and --n");
            };
            if (build_name == "star") {
                need();
                g = build_star(bm, bn);
            } else if (build_name == "partial2tree_extremal") {
                need();
                g = build_partial2tree_extremal(bm, bn);
            } else if (build_name == "trianglefree_extremal") {
                need();
                g = build_trianglefree_extremal(bm, bn);
            } else if (build_name == "petersen_11") {
                g = build_petersen_11();
            } else if (build_name == "wagner_02") {
                g = build_wagner_02();
            } else if (build_name == "c5_02") {
                g = build_c5_02();
            } else if (build_name == "directed_c5") {
                g = build_directed_c5();
            } else if (build_name == "girth5_planar_six") {
                need();
                g = build_girth5_planar_six(bm, bn);
            } else {
                need();
                if (build_input.empty()) throw detail::Usage("'from_diameter2' needs --input");
                g = build_from_diameter2(underlying(detail::load(build_input, in)), bm, bn);
            }
            detail::emit(build_out, build_underlying ? serialize(underlying(g)) : serialize(g), out);
            return 0;
        }

        if (*check) {
            const MixedGraph g = detail::load(check_file, in);
            if (want_absolute) {
                const CliqueResult r = absolute_clique_number(g);
                out << r.value << "\n" << detail::join(r.witness) << "\n";
            } else if (want_chromatic) {
                const ChromaticResult r = chromatic_number(g, limits);
                out << r.value << "\n" << detail::join(r.blocks) << "\n";
            } else if (want_is_absolute) {
                out << (is_absolute_clique(g) ? "true" : "false") << "\n";
            } else if (!sees_pair.empty()) {
                out << (sees(g, sees_pair[0], sees_pair[1]) ? "true" : "false") << "\n";
            } else if (want_relative) {
                const CliqueResult r = relative_clique_number(g);
                out << r.value << "\n" << detail::join(r.witness) << "\n";
            } else {
                throw detail::Usage("check needs one of --relative, --absolute, --chromatic, --is-absolute-clique, --sees");
            }
            return 0;
        }

        if (*search) {
            const UnderlyingGraph u = underlying(detail::load(search_file, in));
            SearchOptions options{limits, threads, true};
            const Objective obj = objective == "relative" ? Objective::relative : Objective::absolute;
            const SearchOutcome s = labeling_search(u, sm, sn, obj, options);
            out << "value=" << s.best_value << "\n"
                << "labeling=" << detail::join(s.best_labeling.types) << "\n"
                << "explored=" << s.explored << "\n";
            if (!search_out.empty()) detail::emit(search_out, serialize(apply_labeling(u, sm, sn, s.best_labeling)), out);
            return 0;
        }

        if (*recognize) {
            out << format_profile(profile(underlying(detail::load(recognize_file, in))));
            return 0;
        }

        SuiteOptions options;
        options.seed = seed;
        options.threads = threads;
        options.limits = limits;
        for (const std::string& a : alphabet_args) {
            Alphabet alpha;
            char comma = 0;
            std::istringstream ss(a);
            if (!(ss >> alpha.m >> comma >> alpha.n) || comma != ',' || !ss.eof()) {
                throw detail::Usage("--alphabet expects M,N, got '" + a + "'");
            }
            options.alphabets.push_back(alpha);
        }
        const std::vector<std::string> run_list = suite == "all" ? suite_names() : std::vector<std::string>{suite};
        std::string text;
        bool pass = true;
        for (std::size_t i = 0; i < run_list.size(); ++i) {
            const VerificationReport r = verify_theorem_suite(run_list[i], options);
            pass = pass && r.passed();
            if (format == "tsv") {
                std::string t = r.to_tsv(timings);
                if (i > 0) t = t.substr(t.find('\n') + 1);
                text += t;
            } else {
                text += r.to_text(timings);
            }
        }
        detail::emit(verify_out, text, out);
        return pass ? 0 : 1;
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const detail::Usage& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace mngraph::cli

#endif  // MNGRAPH_CLI_HPP
