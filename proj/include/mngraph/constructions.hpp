#ifndef MNGRAPH_CONSTRUCTIONS_HPP
#define MNGRAPH_CONSTRUCTIONS_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mngraph/catalog.hpp"
#include "mngraph/error.hpp"
#include "mngraph/graph.hpp"
#include "mngraph/recognizers.hpp"

namespace mngraph {

/// One color in 1..k per edge, aligned with UnderlyingGraph::edges().
struct EdgeColoring {
    std::vector<int> colors;

    int color_count() const {
        return static_cast<int>(std::set<int>(colors.begin(), colors.end()).size());
    }
};

inline bool is_proper(const UnderlyingGraph& u, const EdgeColoring& coloring) {
    const auto edges = u.edges();
    if (coloring.colors.size() != edges.size()) return false;
    std::vector<std::set<int>> seen(u.vertex_count());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int c = coloring.colors[i];
        if (c < 1) return false;
        if (!seen[edges[i].u].insert(c).second || !seen[edges[i].v].insert(c).second) return false;
    }
    return true;
}

namespace detail {

/// Misra-Gries edge coloring with colors 1..Delta+1.
class VizingColorer {
public:
    explicit VizingColorer(const UnderlyingGraph& u)
        : g_(u), n_(u.vertex_count()), palette_(u.max_degree() + 1), color_(static_cast<std::size_t>(n_) * n_, 0) {}

    EdgeColoring run() {
        const auto edges = g_.edges();
        for (const Edge& e : edges) color_edge(e.u, e.v);
        EdgeColoring out;
        for (const Edge& e : edges) out.colors.push_back(at(e.u, e.v));
        return out;
    }

private:
    int& at(Vertex a, Vertex b) { return color_[static_cast<std::size_t>(a) * n_ + b]; }

    void set(Vertex a, Vertex b, int c) {
        at(a, b) = c;
        at(b, a) = c;
    }

    bool is_free(Vertex x, int c) {
        for (Vertex y : g_.neighbors(x)) {
            if (at(x, y) == c) return false;
        }
        return true;
    }

    int smallest_free(Vertex x) {
        for (int c = 1; c <= palette_; ++c) {
            if (is_free(x, c)) return c;
        }
        throw std::logic_error("no free color");
    }

    void color_edge(Vertex x, Vertex v) {
        std::vector<Vertex> fan{v};
        for (;;) {
            const Vertex last = fan.back();
            std::optional<Vertex> grow;
            for (int c = 1; c <= palette_ && !grow; ++c) {
                if (!is_free(last, c)) continue;
                for (Vertex w : g_.neighbors(x)) {
                    if (at(x, w) == c && std::find(fan.begin(), fan.end(), w) == fan.end()) {
                        grow = w;
                        break;
                    }
                }
            }
            if (!grow) break;
            fan.push_back(*grow);
        }
        const int c = smallest_free(x);
        const int d = smallest_free(fan.back());
        invert_path(x, c, d);

        // First fan vertex with d free whose prefix is still a fan.
        std::size_t stop = 0;
        for (;; ++stop) {
            if (stop == fan.size() || (stop > 0 && !is_free(fan[stop - 1], at(x, fan[stop])))) {
                throw std::logic_error("fan rotation failed");
            }
            if (is_free(fan[stop], d)) break;
        }
        for (std::size_t j = 0; j < stop; ++j) set(x, fan[j], at(x, fan[j + 1]));
        set(x, fan[stop], d);
    }

    // Swaps c and d along the maximal path from x that starts with a d edge.
    void invert_path(Vertex x, int c, int d) {
        if (c == d) return;
        std::vector<std::pair<Vertex, Vertex>> path;
        Vertex cur = x;
        Vertex prev = -1;
        int want = d;
        for (;;) {
            Vertex step = -1;
            for (Vertex y : g_.neighbors(cur)) {
                if (y != prev && at(cur, y) == want) {
                    step = y;
                    break;
                }
            }
            if (step < 0) break;
            path.emplace_back(cur, step);
            prev = cur;
            cur = step;
            want = want == d ? c : d;
            if (cur == x) break;
        }
        for (auto [a, b] : path) set(a, b, at(a, b) == c ? d : c);
    }

    const UnderlyingGraph& g_;
    int n_;
    int palette_;
    std::vector<int> color_;
};

/// Checks the constraints shared by the extremal builders.
inline void require_allowed_alphabet(int m, int n) {
    if (m < 0 || n < 0) throw InputError("m and n must be non-negative");
    if (m == 0 && n == 0) throw InputError("(m,n) = (0,0) admits no adjacency types");
    if (m == 0 && n == 1) throw InputError("(m,n) = (0,1) is the excluded case");
}

}  // namespace detail

/// Proper edge coloring with at most Delta+1 colors (fans are built at the
/// lower endpoint of each edge, smallest free colors are used).
inline EdgeColoring build_vizing_edge_coloring(const UnderlyingGraph& u) {
    return detail::VizingColorer(u).run();
}

/// Exhaustive search for a proper edge coloring with colors 1..k.
inline std::optional<EdgeColoring> find_proper_edge_coloring(const UnderlyingGraph& u, int k) {
    const auto edges = u.edges();
    const int n = u.vertex_count();
    std::vector<std::uint64_t> used(n, 0);
    EdgeColoring out;
    out.colors.assign(edges.size(), 0);
    if (k > 63) throw InputError("at most 63 colors supported");
    // Colors are interchangeable, so a fresh color is only ever max_used + 1.
    auto search = [&](auto& self, std::size_t i, int max_used) -> bool {
        if (i == edges.size()) return true;
        const auto [a, b] = edges[i];
        const int top = std::min(k, max_used + 1);
        for (int c = 1; c <= top; ++c) {
            const std::uint64_t bit = std::uint64_t{1} << c;
            if ((used[a] | used[b]) & bit) continue;
            used[a] |= bit;
            used[b] |= bit;
            out.colors[i] = c;
            if (self(self, i + 1, std::max(max_used, c))) return true;
            used[a] &= ~bit;
            used[b] &= ~bit;
        }
        return false;
    };
    if (!search(search, 0, 0)) return std::nullopt;
    return out;
}

/// Turns a diameter-2 graph with Delta < 2m+n into an (m,n)-graph in which
/// the adjacency types at every vertex are pairwise distinct.
///
/// With m1 = min(m, floor((Delta+1)/2)) and n1 = Delta+1-2*m1, color classes
/// 2i-1 and 2i (i <= m1) of a Vizing coloring form paths and cycles that
/// become directed paths and cycles of arc label i: a path starts at its
/// lower-id end, a cycle at its lowest vertex toward the smaller of that
/// vertex's two neighbors. The k-th remaining class gets label m1+k; when
/// that is an arc label, each arc runs from lower to higher id.
inline MixedGraph build_from_diameter2(const UnderlyingGraph& u, int m, int n) {
    if (m < 0 || n < 0) throw InputError("m and n must be non-negative");
    const auto diam = diameter(u);
    if (!diam || *diam > 2) throw InputError("diameter bound failed: underlying graph must have diameter <= 2");
    const int delta = u.max_degree();
    if (delta >= 2 * m + n) {
        throw InputError("degree bound failed: Delta = " + std::to_string(delta) + " must be < 2m+n = " +
                         std::to_string(2 * m + n));
    }
    const int m1 = std::min(m, (delta + 1) / 2);
    const int n1 = delta + 1 - 2 * m1;

    const auto edges = u.edges();
    const EdgeColoring coloring = build_vizing_edge_coloring(u);
    const int nv = u.vertex_count();
    MixedGraph g(m, n, nv);

    for (int i = 1; i <= m1; ++i) {
        std::vector<std::vector<Vertex>> adj(nv);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (coloring.colors[e] == 2 * i - 1 || coloring.colors[e] == 2 * i) {
                adj[edges[e].u].push_back(edges[e].v);
                adj[edges[e].v].push_back(edges[e].u);
            }
        }
        for (auto& row : adj) std::sort(row.begin(), row.end());
        std::vector<char> done(nv, 0);
        auto walk = [&](Vertex start, Vertex next) {
            Vertex prev = start;
            Vertex cur = next;
            done[start] = 1;
            g.add_arc(prev, cur, i);
            while (!done[cur]) {
                done[cur] = 1;
                Vertex step = -1;
                for (Vertex y : adj[cur]) {
                    if (y != prev) step = y;
                }
                if (step < 0) break;
                if (g.adjacent(cur, step)) break;
                g.add_arc(cur, step, i);
                prev = cur;
                cur = step;
            }
        };
        // Paths first (their ends have degree 1), then the remaining cycles.
        for (Vertex v = 0; v < nv; ++v) {
            if (!done[v] && adj[v].size() == 1) walk(v, adj[v][0]);
        }
        for (Vertex v = 0; v < nv; ++v) {
            if (!done[v] && adj[v].size() == 2) walk(v, adj[v][0]);
        }
    }
    for (int k = 1; k <= n1; ++k) {
        const int color = 2 * m1 + k;
        const int label = m1 + k;
        for (std::size_t e = 0; e < edges.size(); ++e) {
            if (coloring.colors[e] != color) continue;
            if (label <= m) {
                g.add_arc(edges[e].u, edges[e].v, label);
            } else {
                g.add_edge(edges[e].u, edges[e].v, label);
            }
        }
    }
    return g;
}

/// K_{1,p}: center 0, leaf j (1-based) has type j-1 read from the center.
inline MixedGraph build_star(int m, int n) {
    detail::require_allowed_alphabet(m, n);
    const int p = 2 * m + n;
    MixedGraph g(m, n, p + 1);
    for (int j = 1; j <= p; ++j) g.add_adjacency(0, j, g.alphabet().label_of_type(j - 1));
    return g;
}

/// Apex x = 0 over p stars; star k occupies 1+k(p+1) .. (k+1)(p+1), center
/// first, and x reaches every vertex of star k with type k.
inline MixedGraph build_partial2tree_extremal(int m, int n) {
    detail::require_allowed_alphabet(m, n);
    const int p = 2 * m + n;
    MixedGraph g(m, n, p * (p + 1) + 1);
    const auto& alpha = g.alphabet();
    for (int k = 0; k < p; ++k) {
        const int center = 1 + k * (p + 1);
        for (int j = 1; j <= p; ++j) g.add_adjacency(center, center + j, alpha.label_of_type(j - 1));
        for (int j = 0; j <= p; ++j) g.add_adjacency(0, center + j, alpha.label_of_type(k));
    }
    return g;
}

/// K_{2,p^2}: hubs 0 and 1; middle vertex 2+k has types (k / p, k % p) read
/// from hubs 0 and 1 respectively.
inline MixedGraph build_trianglefree_extremal(int m, int n) {
    detail::require_allowed_alphabet(m, n);
    const int p = 2 * m + n;
    MixedGraph g(m, n, p * p + 2);
    const auto& alpha = g.alphabet();
    for (int k = 0; k < p * p; ++k) {
        g.add_adjacency(0, 2 + k, alpha.label_of_type(k / p));
        g.add_adjacency(1, 2 + k, alpha.label_of_type(k % p));
    }
    return g;
}

/// (1,1)-labeled Petersen graph (numbering of petersen_graph()): arcs
/// k -> k+1 on the outer cycle, arcs (5+k) -> (5+(k+2)%5) on the pentagram,
/// spokes as edges of label 2.
inline MixedGraph build_petersen_11() {
    MixedGraph g(1, 1, 10);
    for (int k = 0; k < 5; ++k) {
        g.add_arc(k, (k + 1) % 5, 1);
        g.add_arc(5 + k, 5 + (k + 2) % 5, 1);
        g.add_edge(k, k + 5, 2);
    }
    return g;
}

/// (0,2)-labeled Wagner graph (numbering of wagner_graph()): cycle edges
/// {k,k+1} have label 1 for even k and 2 for odd k; chords {0,4},{2,6} have
/// label 1 and {1,5},{3,7} label 2.
inline MixedGraph build_wagner_02() {
    MixedGraph g(0, 2, 8);
    for (int k = 0; k < 8; ++k) g.add_edge(k, (k + 1) % 8, k % 2 == 0 ? 1 : 2);
    g.add_edge(0, 4, 1);
    g.add_edge(2, 6, 1);
    g.add_edge(1, 5, 2);
    g.add_edge(3, 7, 2);
    return g;
}

/// Directed 5-cycle k -> k+1 with arc label 1, as a (1,0)-graph.
inline MixedGraph build_directed_c5() {
    MixedGraph g(1, 0, 5);
    for (int k = 0; k < 5; ++k) g.add_arc(k, (k + 1) % 5, 1);
    return g;
}

/// (0,2)-labeled 5-cycle: labels 1,2,1,2,1 on {0,1},{1,2},{2,3},{3,4},{4,0}.
inline MixedGraph build_c5_02() {
    MixedGraph g(0, 2, 5);
    g.add_edge(0, 1, 1);
    g.add_edge(1, 2, 2);
    g.add_edge(2, 3, 1);
    g.add_edge(3, 4, 2);
    g.add_edge(4, 0, 1);
    return g;
}

/// The 5-cycle of build_from_diameter2(C5, m, n) on 0..4, apex z = 5, and
/// helpers 6+i forming special 2-paths z - (6+i) - i: read from the helper,
/// z has type 0 and i has type 1.
inline MixedGraph build_girth5_planar_six(int m, int n) {
    if (m < 0 || n < 0) throw InputError("m and n must be non-negative");
    if (2 * m + n < 3) throw InputError("needs 2m+n >= 3");
    const MixedGraph base = build_from_diameter2(cycle_graph(5), m, n);
    MixedGraph g(m, n, 11);
    for (Vertex v = 0; v < 5; ++v) {
        for (const Neighbor& nb : base.neighbors(v)) {
            if (v < nb.vertex) g.add_adjacency(v, nb.vertex, nb.label);
        }
    }
    const auto& alpha = g.alphabet();
    for (int i = 0; i < 5; ++i) {
        g.add_adjacency(6 + i, 5, alpha.label_of_type(0));
        g.add_adjacency(6 + i, i, alpha.label_of_type(1));
    }
    return g;
}

}  // namespace mngraph

#endif  // MNGRAPH_CONSTRUCTIONS_HPP
