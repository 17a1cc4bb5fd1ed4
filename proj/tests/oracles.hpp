// Brute-force reference implementations used only by the tests. They work
// straight from the definitions and share no algorithmic code with the
// library (only the graph containers).
#ifndef MNGRAPH_TESTS_ORACLES_HPP
#define MNGRAPH_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "mngraph/graph.hpp"

namespace oracle {

using mngraph::MixedGraph;
using mngraph::UnderlyingGraph;

// sigma(u,v) as a raw int, 0 when not adjacent.
inline int sig(const MixedGraph& g, int u, int v) {
    for (const auto& nb : g.neighbors(u)) {
        if (nb.vertex == v) return nb.label.value();
    }
    return 0;
}

// u sees v inside the vertex mask `within`.
inline bool sees_within(const MixedGraph& g, int u, int v, std::uint64_t within) {
    if (sig(g, u, v) != 0) return true;
    for (int w = 0; w < g.vertex_count(); ++w) {
        if (w == u || w == v || !((within >> w) & 1u)) continue;
        const int a = sig(g, w, u);
        const int b = sig(g, w, v);
        if (a != 0 && b != 0 && a != b) return true;
    }
    return false;
}

inline std::uint64_t all_mask(int n) { return n == 64 ? ~0ULL : ((1ULL << n) - 1); }

inline bool sees(const MixedGraph& g, int u, int v) { return oracle::sees_within(g, u, v, all_mask(g.vertex_count())); }

inline int popcount(std::uint64_t x) { return __builtin_popcountll(x); }

// Largest pairwise-seeing subset, by subset enumeration (n <= 16).
inline int relative_clique(const MixedGraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
        if (popcount(s) <= best) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n && ok; ++v) {
                if (((s >> u) & 1u) && ((s >> v) & 1u)) ok = oracle::sees(g, u, v);
            }
        }
        if (ok) best = popcount(s);
    }
    return best;
}

// Largest S with every pair seeing through midpoints in S (n <= 16).
inline int absolute_clique(const MixedGraph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint64_t s = 0; s < (1ULL << n); ++s) {
        if (popcount(s) <= best) continue;
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n && ok; ++v) {
                if (((s >> u) & 1u) && ((s >> v) & 1u)) ok = oracle::sees_within(g, u, v, s);
            }
        }
        if (ok) best = popcount(s);
    }
    return best;
}

// A partition given as block index per vertex is a valid quotient when no
// block holds an adjacent pair and every ordered pair of blocks carries at
// most one label.
inline bool valid_quotient(const MixedGraph& g, const std::vector<int>& block) {
    const int n = g.vertex_count();
    int k = 0;
    for (int b : block) k = std::max(k, b + 1);
    std::vector<int> between(static_cast<std::size_t>(k) * k, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            const int s = sig(g, u, v);
            if (s == 0) continue;
            if (block[u] == block[v]) return false;
            int& slot = between[static_cast<std::size_t>(block[u]) * k + block[v]];
            if (slot != 0 && slot != s) return false;
            slot = s;
        }
    }
    return true;
}

// Calls f on every set partition of 0..n-1 (restricted growth strings).
inline void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> a(n, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            f(a);
            return;
        }
        for (int b = 0; b <= used; ++b) {
            a[i] = b;
            rec(i + 1, std::max(used, b + 1));
        }
    };
    if (n == 0) {
        f(a);
        return;
    }
    rec(0, 0);
}

inline int chromatic(const MixedGraph& g) {
    int best = g.vertex_count();
    for_each_partition(g.vertex_count(), [&](const std::vector<int>& a) {
        int k = 0;
        for (int b : a) k = std::max(k, b + 1);
        if (k < best && valid_quotient(g, a)) best = k;
    });
    return best;
}

inline bool mergeable(const MixedGraph& g, int u, int v) {
    bool found = false;
    for_each_partition(g.vertex_count(), [&](const std::vector<int>& a) {
        if (!found && a[u] == a[v] && valid_quotient(g, a)) found = true;
    });
    return found;
}

// K4 minor: four disjoint connected branch sets, pairwise joined by an edge.
inline bool has_k4_minor(const UnderlyingGraph& u) {
    const int n = u.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& e : u.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    auto connected = [&](std::uint32_t s) {
        if (s == 0) return false;
        std::uint32_t seen = s & (~s + 1), frontier = seen;
        while (frontier) {
            std::uint32_t grow = 0;
            for (int v = 0; v < n; ++v) {
                if ((frontier >> v) & 1u) grow |= adj[v];
            }
            frontier = grow & s & ~seen;
            seen |= frontier;
        }
        return seen == s;
    };
    auto touch = [&](std::uint32_t a, std::uint32_t b) {
        for (int v = 0; v < n; ++v) {
            if (((a >> v) & 1u) && (adj[v] & b)) return true;
        }
        return false;
    };
    // label 0 = unused, 1..4 = branch sets in order of first appearance
    std::vector<int> lab(n, 0);
    std::function<bool(int, int)> rec = [&](int i, int opened) -> bool {
        if (i == n) {
            if (opened < 4) return false;
            std::uint32_t sets[4] = {0, 0, 0, 0};
            for (int v = 0; v < n; ++v) {
                if (lab[v] > 0) sets[lab[v] - 1] |= 1u << v;
            }
            for (int a = 0; a < 4; ++a) {
                if (!connected(sets[a])) return false;
            }
            for (int a = 0; a < 4; ++a) {
                for (int b = a + 1; b < 4; ++b) {
                    if (!touch(sets[a], sets[b])) return false;
                }
            }
            return true;
        }
        if (n - i < 4 - opened) return false;
        for (int l = 0; l <= std::min(4, opened + 1); ++l) {
            lab[i] = l;
            if (rec(i + 1, std::max(opened, l))) return true;
        }
        return false;
    };
    return rec(0, 0);
}

// Shortest cycle length by checking every simple cycle through edge removal
// and BFS distance: for each edge uv, girth candidate = dist_{G-uv}(u,v)+1.
inline std::optional<int> girth(const UnderlyingGraph& u) {
    const int n = u.vertex_count();
    std::optional<int> best;
    for (const auto& e : u.edges()) {
        std::vector<int> dist(n, -1);
        std::vector<int> queue{e.u};
        dist[e.u] = 0;
        for (std::size_t h = 0; h < queue.size(); ++h) {
            const int x = queue[h];
            for (int y : u.neighbors(x)) {
                if ((x == e.u && y == e.v) || (x == e.v && y == e.u)) continue;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist[e.v] >= 0 && (!best || dist[e.v] + 1 < *best)) best = dist[e.v] + 1;
    }
    return best;
}

// Degeneracy as max over subsets of min degree (n <= 16).
inline int degeneracy(const UnderlyingGraph& u) {
    const int n = u.vertex_count();
    int best = 0;
    for (std::uint32_t s = 1; s < (1u << n); ++s) {
        int low = n;
        for (int v = 0; v < n; ++v) {
            if (!((s >> v) & 1u)) continue;
            int d = 0;
            for (int w : u.neighbors(v)) d += (s >> w) & 1u;
            low = std::min(low, d);
        }
        best = std::max(best, low);
    }
    return best;
}

}  // namespace oracle

#endif  // MNGRAPH_TESTS_ORACLES_HPP
