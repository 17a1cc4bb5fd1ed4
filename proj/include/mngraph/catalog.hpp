#ifndef MNGRAPH_CATALOG_HPP
#define MNGRAPH_CATALOG_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <unordered_map>
#include <vector>

#include "mngraph/error.hpp"
#include "mngraph/graph.hpp"

namespace mngraph {

// Named graphs. Vertex numbering is part of the contract.

/// Path 0-1-...-(k-1).
inline UnderlyingGraph path_graph(int k) {
    UnderlyingGraph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

/// Cycle 0-1-...-(k-1)-0, k >= 3.
inline UnderlyingGraph cycle_graph(int k) {
    if (k < 3) throw InputError("a cycle needs at least 3 vertices");
    UnderlyingGraph g = path_graph(k);
    g.add_edge(0, k - 1);
    return g;
}

inline UnderlyingGraph complete_graph(int k) {
    UnderlyingGraph g(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
    }
    return g;
}

/// K_{a,b} with sides 0..a-1 and a..a+b-1.
inline UnderlyingGraph complete_bipartite_graph(int a, int b) {
    UnderlyingGraph g(a + b);
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    }
    return g;
}

/// Outer cycle 0..4, spokes k-(k+5), inner pentagram (5+k)-(5+(k+2)%5).
inline UnderlyingGraph petersen_graph() {
    UnderlyingGraph g(10);
    for (int k = 0; k < 5; ++k) {
        g.add_edge(k, (k + 1) % 5);
        g.add_edge(k, k + 5);
        g.add_edge(5 + k, 5 + (k + 2) % 5);
    }
    return g;
}

/// 8-cycle 0..7 plus the four antipodal chords k-(k+4).
inline UnderlyingGraph wagner_graph() {
    UnderlyingGraph g = cycle_graph(8);
    for (int k = 0; k < 4; ++k) g.add_edge(k, k + 4);
    return g;
}

/// Which graphs enumerate_graphs() returns.
struct CatalogFilter {
    bool connected_only = true;
    int max_degree = -1;  // negative: unbounded
};

namespace detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Small graph as adjacency bit rows, n <= 16.
struct SmallGraph {
    int n = 0;
    std::vector<std::uint32_t> rows;

    bool adjacent(int u, int v) const { return (rows[u] >> v) & 1u; }
    int degree(int u) const { return __builtin_popcount(rows[u]); }
};

/// Isomorphism-invariant vertex colors by color refinement seeded with
/// (degree, triangles through the vertex).
inline std::vector<std::uint64_t> refined_colors(const SmallGraph& g) {
    std::vector<std::uint64_t> color(g.n), next(g.n);
    for (int v = 0; v < g.n; ++v) {
        int triangles = 0;
        for (int w = 0; w < g.n; ++w) {
            if (g.adjacent(v, w)) triangles += __builtin_popcount(g.rows[v] & g.rows[w]);
        }
        color[v] = mix64(static_cast<std::uint64_t>(g.degree(v)) * 131 + triangles);
    }
    std::vector<std::uint64_t> nbr;
    for (int round = 0; round < g.n; ++round) {
        for (int v = 0; v < g.n; ++v) {
            nbr.clear();
            for (int w = 0; w < g.n; ++w) {
                if (g.adjacent(v, w)) nbr.push_back(color[w]);
            }
            std::sort(nbr.begin(), nbr.end());
            std::uint64_t h = mix64(color[v]);
            for (std::uint64_t c : nbr) h = mix64(h ^ c);
            next[v] = h;
        }
        auto distinct = [](std::vector<std::uint64_t> c) {
            std::sort(c.begin(), c.end());
            return std::unique(c.begin(), c.end()) - c.begin();
        };
        const bool stable = distinct(next) == distinct(color);
        color.swap(next);
        if (stable) break;
    }
    return color;
}

inline std::uint64_t graph_certificate(const std::vector<std::uint64_t>& colors) {
    std::vector<std::uint64_t> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t h = mix64(sorted.size());
    for (std::uint64_t c : sorted) h = mix64(h ^ c);
    return h;
}

/// Backtracking isomorphism test restricted to color-preserving maps.
inline bool isomorphic(const SmallGraph& a, const std::vector<std::uint64_t>& ca, const SmallGraph& b,
                       const std::vector<std::uint64_t>& cb) {
    const int n = a.n;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> class_size(n, 0);
    for (int v = 0; v < n; ++v) {
        class_size[v] = static_cast<int>(std::count(ca.begin(), ca.end(), ca[v]));
    }
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return class_size[x] < class_size[y]; });
    std::vector<int> image(n, -1);
    std::uint32_t used = 0;
    auto place = [&](auto& self, int depth) -> bool {
        if (depth == n) return true;
        const int x = order[depth];
        for (int y = 0; y < n; ++y) {
            if ((used >> y) & 1u || cb[y] != ca[x]) continue;
            bool ok = true;
            for (int d = 0; d < depth && ok; ++d) {
                const int px = order[d];
                ok = a.adjacent(x, px) == b.adjacent(y, image[px]);
            }
            if (!ok) continue;
            image[x] = y;
            used |= 1u << y;
            if (self(self, depth + 1)) return true;
            used &= ~(1u << y);
            image[x] = -1;
        }
        return false;
    };
    return place(place, 0);
}

inline bool small_connected(const SmallGraph& g) {
    if (g.n == 0) return true;
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t grow = 0;
        for (int v = 0; v < g.n; ++v) {
            if ((frontier >> v) & 1u) grow |= g.rows[v];
        }
        frontier = grow & ~seen;
        seen |= grow;
    }
    return seen == (g.n == 32 ? ~0u : ((1u << g.n) - 1));
}

}  // namespace detail

/// All graphs on n vertices up to isomorphism (n <= 12), optionally only the
/// connected ones and/or those with maximum degree <= filter.max_degree.
///
/// Graphs on k vertices are grown from those on k-1 vertices by adding a
/// vertex with every admissible neighborhood; every graph arises this way
/// (for connected graphs, by deleting a non-cut vertex), and duplicates are
/// removed with a refinement certificate plus an exact isomorphism test.
inline std::vector<UnderlyingGraph> enumerate_graphs(int n, CatalogFilter filter = {}) {
    if (n < 0 || n > 12) throw InputError("graph catalog supports 0..12 vertices");
    using detail::SmallGraph;
    const int cap = filter.max_degree < 0 ? n : filter.max_degree;

    std::vector<SmallGraph> level{SmallGraph{0, {}}};
    for (int k = 1; k <= n; ++k) {
        std::vector<SmallGraph> grown;
        std::vector<std::vector<std::uint64_t>> grown_colors;
        std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
        const std::uint32_t subsets = 1u << (k - 1);
        for (const SmallGraph& parent : level) {
            std::uint32_t saturated = 0;
            for (int v = 0; v < parent.n; ++v) {
                if (parent.degree(v) >= cap) saturated |= 1u << v;
            }
            for (std::uint32_t s = 0; s < subsets; ++s) {
                if (s & saturated) continue;
                if (__builtin_popcount(s) > cap) continue;
                if (filter.connected_only && s == 0 && k > 1) continue;
                SmallGraph child{k, parent.rows};
                child.rows.push_back(s);
                for (int v = 0; v < parent.n; ++v) {
                    if ((s >> v) & 1u) child.rows[v] |= 1u << (k - 1);
                }
                auto colors = detail::refined_colors(child);
                const std::uint64_t cert = detail::graph_certificate(colors);
                auto& bucket = buckets[cert];
                bool duplicate = false;
                for (std::size_t idx : bucket) {
                    if (detail::isomorphic(child, colors, grown[idx], grown_colors[idx])) {
                        duplicate = true;
                        break;
                    }
                }
                if (duplicate) continue;
                bucket.push_back(grown.size());
                grown.push_back(std::move(child));
                grown_colors.push_back(std::move(colors));
            }
        }
        level = std::move(grown);
    }

    std::vector<UnderlyingGraph> out;
    out.reserve(level.size());
    for (const SmallGraph& g : level) {
        if (filter.connected_only && !detail::small_connected(g)) continue;
        UnderlyingGraph u(g.n);
        for (int a = 0; a < g.n; ++a) {
            for (int b = a + 1; b < g.n; ++b) {
                if (g.adjacent(a, b)) u.add_edge(a, b);
            }
        }
        out.push_back(std::move(u));
    }
    return out;
}

}  // namespace mngraph

#endif  // MNGRAPH_CATALOG_HPP
