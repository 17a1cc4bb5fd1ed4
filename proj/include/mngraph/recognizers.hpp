#ifndef MNGRAPH_RECOGNIZERS_HPP
#define MNGRAPH_RECOGNIZERS_HPP

#include <algorithm>
#include <deque>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "mngraph/graph.hpp"

namespace mngraph {

inline int max_degree(const UnderlyingGraph& u) { return u.max_degree(); }

/// Length of a shortest cycle; nullopt for forests.
inline std::optional<int> girth(const UnderlyingGraph& u) {
    const int n = u.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        parent[s] = -1;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            if (2 * dist[x] + 1 >= best) break;
            for (Vertex y : u.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

struct Degeneracy {
    int value = 0;
    std::vector<Vertex> order;  // removal order; each vertex has <= value later neighbors
};

/// Degeneracy by repeatedly removing a minimum-degree vertex (smallest id on
/// ties).
inline Degeneracy degeneracy(const UnderlyingGraph& u) {
    const int n = u.vertex_count();
    std::vector<int> deg(n);
    std::vector<char> removed(n, 0);
    std::set<std::pair<int, Vertex>> queue;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = u.degree(v);
        queue.insert({deg[v], v});
    }
    Degeneracy out;
    while (!queue.empty()) {
        const auto [d, v] = *queue.begin();
        queue.erase(queue.begin());
        removed[v] = 1;
        out.value = std::max(out.value, d);
        out.order.push_back(v);
        for (Vertex w : u.neighbors(v)) {
            if (removed[w]) continue;
            queue.erase({deg[w], w});
            --deg[w];
            queue.insert({deg[w], w});
        }
    }
    return out;
}

/// Largest BFS eccentricity; nullopt when the graph is disconnected.
inline std::optional<int> diameter(const UnderlyingGraph& u) {
    const int n = u.vertex_count();
    int best = 0;
    std::vector<int> dist(n);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[s] = 0;
        std::deque<Vertex> queue{s};
        int reached = 1;
        while (!queue.empty()) {
            const Vertex x = queue.front();
            queue.pop_front();
            for (Vertex y : u.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    best = std::max(best, dist[y]);
                    ++reached;
                    queue.push_back(y);
                }
            }
        }
        if (reached != n) return std::nullopt;
    }
    return best;
}

/// K4-minor-freeness by series-parallel reduction.
///
/// Repeatedly deletes a vertex of degree <= 1, or suppresses a vertex of
/// degree 2 by joining its two neighbors (a parallel edge collapses into the
/// existing one). The graph is a partial 2-tree iff this empties it; the
/// outcome does not depend on the reduction order, and the work queue is
/// processed in vertex-id order.
inline bool is_partial_2_tree(const UnderlyingGraph& u) {
    const int n = u.vertex_count();
    std::vector<std::set<Vertex>> adj(n);
    for (const Edge& e : u.edges()) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<char> alive(n, 1);
    std::set<Vertex> work;
    for (Vertex v = 0; v < n; ++v) {
        if (adj[v].size() <= 2) work.insert(v);
    }
    int remaining = n;
    while (!work.empty()) {
        const Vertex v = *work.begin();
        work.erase(work.begin());
        if (!alive[v] || adj[v].size() > 2) continue;
        const std::vector<Vertex> nbrs(adj[v].begin(), adj[v].end());
        for (Vertex w : nbrs) adj[w].erase(v);
        adj[v].clear();
        alive[v] = 0;
        --remaining;
        if (nbrs.size() == 2) {
            adj[nbrs[0]].insert(nbrs[1]);
            adj[nbrs[1]].insert(nbrs[0]);
        }
        for (Vertex w : nbrs) {
            if (adj[w].size() <= 2) work.insert(w);
        }
    }
    return remaining == 0;
}

/// Exact planarity (Boyer-Myrvold).
inline bool is_planar(const UnderlyingGraph& u) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph g(static_cast<std::size_t>(u.vertex_count()));
    for (const Edge& e : u.edges()) boost::add_edge(e.u, e.v, g);
    return boost::boyer_myrvold_planarity_test(g);
}

struct FamilyProfile {
    int max_degree = 0;
    std::optional<int> girth;     // nullopt: acyclic
    int degeneracy = 0;
    std::optional<int> diameter;  // nullopt: disconnected
    bool is_partial_2_tree = false;
    bool is_planar = false;
};

inline FamilyProfile profile(const UnderlyingGraph& u) {
    return {u.max_degree(), girth(u), degeneracy(u).value, diameter(u), is_partial_2_tree(u), is_planar(u)};
}

/// One `key=value` line per field.
inline std::string format_profile(const FamilyProfile& p) {
    std::string out;
    out += "max_degree=" + std::to_string(p.max_degree) + "\n";
    out += "girth=" + (p.girth ? std::to_string(*p.girth) : std::string("acyclic")) + "\n";
    out += "degeneracy=" + std::to_string(p.degeneracy) + "\n";
    out += "diameter=" + (p.diameter ? std::to_string(*p.diameter) : std::string("disconnected")) + "\n";
    out += std::string("partial_2_tree=") + (p.is_partial_2_tree ? "true" : "false") + "\n";
    out += std::string("planar=") + (p.is_planar ? "true" : "false") + "\n";
    return out;
}

}  // namespace mngraph

#endif  // MNGRAPH_RECOGNIZERS_HPP
