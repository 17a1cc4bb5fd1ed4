#ifndef MNGRAPH_GRAPH_HPP
#define MNGRAPH_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mngraph/error.hpp"
#include "mngraph/labels.hpp"

namespace mngraph {

using Vertex = int;

/// Unordered vertex pair stored with u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Plain simple undirected graph on vertices 0..vertex_count-1.
class UnderlyingGraph {
public:
    UnderlyingGraph() = default;
    explicit UnderlyingGraph(int vertex_count) : adjacency_(check_count(vertex_count)) {}

    UnderlyingGraph(int vertex_count, std::span<const Edge> edges) : UnderlyingGraph(vertex_count) {
        for (const Edge& e : edges) add_edge(e.u, e.v);
    }

    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    int edge_count() const noexcept { return edge_count_; }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("loop at vertex " + std::to_string(u));
        if (adjacent(u, v)) {
            throw InputError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        insert_sorted(adjacency_[u], v);
        insert_sorted(adjacency_[v], u);
        ++edge_count_;
    }

    bool adjacent(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
    }

    std::span<const Vertex> neighbors(Vertex u) const {
        check_vertex(u);
        return adjacency_[u];
    }

    int degree(Vertex u) const { return static_cast<int>(neighbors(u).size()); }

    int max_degree() const noexcept {
        std::size_t best = 0;
        for (const auto& row : adjacency_) best = std::max(best, row.size());
        return static_cast<int>(best);
    }

    /// Edges in lexicographic (u, v) order with u < v.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (Vertex u = 0; u < vertex_count(); ++u) {
            for (Vertex v : adjacency_[u]) {
                if (u < v) out.push_back({u, v});
            }
        }
        return out;
    }

    friend bool operator==(const UnderlyingGraph&, const UnderlyingGraph&) = default;

private:
    static int check_count(int count) {
        if (count < 0) throw InputError("vertex count must be non-negative");
        return count;
    }

    void check_vertex(Vertex u) const {
        if (u < 0 || u >= vertex_count()) {
            throw InputError("unknown vertex " + std::to_string(u));
        }
    }

    static void insert_sorted(std::vector<Vertex>& row, Vertex v) {
        row.insert(std::lower_bound(row.begin(), row.end(), v), v);
    }

    std::vector<std::vector<Vertex>> adjacency_;
    int edge_count_ = 0;
};

/// A neighbor together with the label read from the owning vertex toward it.
struct Neighbor {
    Vertex vertex;
    SignedLabel label;

    friend constexpr bool operator==(const Neighbor&, const Neighbor&) = default;
};

/// An (m,n)-colored mixed graph.
///
/// Both ordered entries of every adjacency are stored, so sigma(u,v) and
/// sigma(v,u) are always available directly; the mutators keep them in sync
/// with the sign convention sigma(v,u) = -sigma(u,v) for arcs.
class MixedGraph {
public:
    MixedGraph() = default;

    MixedGraph(int m, int n, int vertex_count) : alphabet_{m, n} {
        if (m < 0 || n < 0) throw InputError("m and n must be non-negative");
        if (vertex_count < 0) throw InputError("vertex count must be non-negative");
        adjacency_.resize(vertex_count);
    }

    const LabelAlphabet& alphabet() const noexcept { return alphabet_; }
    int m() const noexcept { return alphabet_.m; }
    int n() const noexcept { return alphabet_.n; }
    int type_count() const noexcept { return alphabet_.type_count(); }
    int vertex_count() const noexcept { return static_cast<int>(adjacency_.size()); }
    int adjacency_count() const noexcept { return adjacency_count_; }

    /// Adds the arc tail -> head, 1 <= label <= m.
    void add_arc(Vertex tail, Vertex head, int label) {
        if (label < 1 || label > m()) {
            throw InputError("arc label " + std::to_string(label) + " outside 1.." + std::to_string(m()));
        }
        add_adjacency(tail, head, SignedLabel(label));
    }

    /// Adds the edge {u, v}, m+1 <= label <= m+n.
    void add_edge(Vertex u, Vertex v, int label) {
        if (label <= m() || label > m() + n()) {
            throw InputError("edge label " + std::to_string(label) + " outside " + std::to_string(m() + 1) +
                             ".." + std::to_string(m() + n()));
        }
        add_adjacency(u, v, SignedLabel(label));
    }

    /// Adds the adjacency with sigma(u,v) = label; the reverse entry follows.
    void add_adjacency(Vertex u, Vertex v, SignedLabel label) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InputError("loop at vertex " + std::to_string(u));
        if (!alphabet_.valid(label)) {
            throw InputError("label " + std::to_string(label.value()) + " out of range for (m,n) = (" +
                             std::to_string(m()) + "," + std::to_string(n()) + ")");
        }
        if (adjacent(u, v)) {
            throw InputError("duplicate adjacency {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        insert_sorted(adjacency_[u], Neighbor{v, label});
        insert_sorted(adjacency_[v], Neighbor{u, alphabet_.reverse(label)});
        ++adjacency_count_;
    }

    /// sigma(u,v), or nothing when u and v are not adjacent.
    std::optional<SignedLabel> label(Vertex u, Vertex v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& row = adjacency_[u];
        auto it = std::lower_bound(row.begin(), row.end(), v,
                                   [](const Neighbor& nb, Vertex x) { return nb.vertex < x; });
        if (it == row.end() || it->vertex != v) return std::nullopt;
        return it->label;
    }

    bool adjacent(Vertex u, Vertex v) const { return label(u, v).has_value(); }

    /// Neighbors of u sorted by vertex id, each with sigma(u, neighbor).
    std::span<const Neighbor> neighbors(Vertex u) const {
        check_vertex(u);
        return adjacency_[u];
    }

    int degree(Vertex u) const { return static_cast<int>(neighbors(u).size()); }

    int max_degree() const noexcept {
        std::size_t best = 0;
        for (const auto& row : adjacency_) best = std::max(best, row.size());
        return static_cast<int>(best);
    }

    friend bool operator==(const MixedGraph&, const MixedGraph&) = default;

private:
    void check_vertex(Vertex u) const {
        if (u < 0 || u >= vertex_count()) {
            throw InputError("unknown vertex " + std::to_string(u));
        }
    }

    static void insert_sorted(std::vector<Neighbor>& row, Neighbor nb) {
        auto it = std::lower_bound(row.begin(), row.end(), nb.vertex,
                                   [](const Neighbor& x, Vertex v) { return x.vertex < v; });
        row.insert(it, nb);
    }

    LabelAlphabet alphabet_;
    std::vector<std::vector<Neighbor>> adjacency_;
    int adjacency_count_ = 0;
};

/// N^alpha(u): the vertices v with sigma(u,v) = alpha, in increasing order.
inline std::vector<Vertex> neighbors_of_type(const MixedGraph& g, Vertex u, SignedLabel alpha) {
    if (!g.alphabet().valid(alpha)) {
        throw InputError("label " + std::to_string(alpha.value()) + " out of range for (m,n) = (" +
                         std::to_string(g.m()) + "," + std::to_string(g.n()) + ")");
    }
    std::vector<Vertex> out;
    for (const Neighbor& nb : g.neighbors(u)) {
        if (nb.label == alpha) out.push_back(nb.vertex);
    }
    return out;
}

inline UnderlyingGraph underlying(const MixedGraph& g) {
    UnderlyingGraph out(g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (const Neighbor& nb : g.neighbors(u)) {
            if (u < nb.vertex) out.add_edge(u, nb.vertex);
        }
    }
    return out;
}

/// One adjacency type (canonical index, see LabelAlphabet) per underlying
/// edge, aligned with UnderlyingGraph::edges(). The type is read from the
/// lower endpoint toward the higher one.
struct Labeling {
    std::vector<int> types;

    friend auto operator<=>(const Labeling&, const Labeling&) = default;
};

inline MixedGraph apply_labeling(const UnderlyingGraph& u, int m, int n, const Labeling& labeling) {
    const auto edges = u.edges();
    if (labeling.types.size() != edges.size()) {
        throw InputError("labeling has " + std::to_string(labeling.types.size()) + " entries for " +
                         std::to_string(edges.size()) + " edges");
    }
    MixedGraph g(m, n, u.vertex_count());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        g.add_adjacency(edges[i].u, edges[i].v, g.alphabet().label_of_type(labeling.types[i]));
    }
    return g;
}

/// The labeling of und(g) that reproduces g under apply_labeling.
inline Labeling labeling_of(const MixedGraph& g) {
    Labeling out;
    for (Vertex u = 0; u < g.vertex_count(); ++u) {
        for (const Neighbor& nb : g.neighbors(u)) {
            if (u < nb.vertex) out.types.push_back(g.alphabet().type_of_label(nb.label));
        }
    }
    return out;
}

}  // namespace mngraph

#endif  // MNGRAPH_GRAPH_HPP
