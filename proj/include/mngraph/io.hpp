#ifndef MNGRAPH_IO_HPP
#define MNGRAPH_IO_HPP

// Text format v1:
//
//   mngraph v1
//   m <m> n <n>
//   vertices <N>
//   arc <tail> <head> <label>     1 <= label <= m
//   edge <u> <v> <label>          m+1 <= label <= m+n
//
// '#' starts a comment that runs to the end of the line; blank lines are
// ignored. The writer emits records sorted by (min(u,v), max(u,v)).

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mngraph/error.hpp"
#include "mngraph/graph.hpp"

namespace mngraph {

namespace detail {

struct TextLine {
    int number;
    std::vector<std::string_view> tokens;
};

inline std::vector<TextLine> tokenize_lines(std::string_view text) {
    std::vector<TextLine> out;
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        TextLine parsed{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
            if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        if (!parsed.tokens.empty()) out.push_back(std::move(parsed));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

inline int parse_int(const TextLine& line, std::string_view token, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line.number, "expected integer " + std::string(what) + ", got '" + std::string(token) + "'");
    }
    return value;
}

inline void expect_keyword(const TextLine& line, std::size_t index, std::string_view keyword) {
    if (line.tokens.size() <= index || line.tokens[index] != keyword) {
        throw ParseError(line.number, "expected '" + std::string(keyword) + "'");
    }
}

}  // namespace detail

inline MixedGraph parse_graph(std::string_view text) {
    const auto lines = detail::tokenize_lines(text);
    if (lines.empty()) throw ParseError(1, "empty input, expected 'mngraph v1'");
    const auto& magic = lines[0];
    if (magic.tokens.size() != 2 || magic.tokens[0] != "mngraph" || magic.tokens[1] != "v1") {
        throw ParseError(magic.number, "expected header 'mngraph v1'");
    }
    if (lines.size() < 2) throw ParseError(magic.number + 1, "missing 'm <m> n <n>' line");
    const auto& mn = lines[1];
    detail::expect_keyword(mn, 0, "m");
    detail::expect_keyword(mn, 2, "n");
    if (mn.tokens.size() != 4) throw ParseError(mn.number, "expected 'm <m> n <n>'");
    const int m = detail::parse_int(mn, mn.tokens[1], "m");
    const int n = detail::parse_int(mn, mn.tokens[3], "n");
    if (m < 0 || n < 0) throw ParseError(mn.number, "m and n must be non-negative");
    if (lines.size() < 3) throw ParseError(mn.number + 1, "missing 'vertices <N>' line");
    const auto& vs = lines[2];
    detail::expect_keyword(vs, 0, "vertices");
    if (vs.tokens.size() != 2) throw ParseError(vs.number, "expected 'vertices <N>'");
    const int count = detail::parse_int(vs, vs.tokens[1], "vertex count");
    if (count < 0) throw ParseError(vs.number, "vertex count must be non-negative");

    MixedGraph g(m, n, count);
    for (std::size_t i = 3; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto kind = line.tokens[0];
        if (kind != "arc" && kind != "edge") {
            throw ParseError(line.number, "unknown record '" + std::string(kind) + "'");
        }
        if (line.tokens.size() != 4) throw ParseError(line.number, "expected '" + std::string(kind) + " <u> <v> <label>'");
        const int u = detail::parse_int(line, line.tokens[1], "vertex");
        const int v = detail::parse_int(line, line.tokens[2], "vertex");
        const int label = detail::parse_int(line, line.tokens[3], "label");
        try {
            if (kind == "arc") {
                g.add_arc(u, v, label);
            } else {
                g.add_edge(u, v, label);
            }
        } catch (const InputError& e) {
            throw ParseError(line.number, e.what());
        }
    }
    return g;
}

inline MixedGraph read_graph(std::istream& in) {
    std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    return parse_graph(text);
}

inline std::string serialize(const MixedGraph& g) {
    std::ostringstream out;
    out << "mngraph v1\n";
    out << "m " << g.m() << " n " << g.n() << "\n";
    out << "vertices " << g.vertex_count() << "\n";
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (const Neighbor& nb : g.neighbors(u)) {
            if (nb.vertex < u) continue;
            const int value = nb.label.value();
            if (!g.alphabet().is_arc(nb.label)) {
                out << "edge " << u << ' ' << nb.vertex << ' ' << value << "\n";
            } else if (value > 0) {
                out << "arc " << u << ' ' << nb.vertex << ' ' << value << "\n";
            } else {
                out << "arc " << nb.vertex << ' ' << u << ' ' << -value << "\n";
            }
        }
    }
    return out.str();
}

/// Reads a plain graph written as `m 0 n 1` with every record `edge u v 1`.
inline UnderlyingGraph parse_underlying(std::string_view text) {
    const MixedGraph g = parse_graph(text);
    if (g.m() != 0 || g.n() != 1) {
        throw ParseError(2, "plain graphs must be declared 'm 0 n 1'");
    }
    return underlying(g);
}

inline std::string serialize(const UnderlyingGraph& u) {
    MixedGraph g(0, 1, u.vertex_count());
    for (const Edge& e : u.edges()) g.add_edge(e.u, e.v, 1);
    return serialize(g);
}

}  // namespace mngraph

#endif  // MNGRAPH_IO_HPP
