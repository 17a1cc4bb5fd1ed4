#ifndef MNGRAPH_SEEING_HPP
#define MNGRAPH_SEEING_HPP

#include <string>
#include <vector>

#include "mngraph/detail/quotient.hpp"
#include "mngraph/error.hpp"
#include "mngraph/graph.hpp"
#include "mngraph/vertex_set.hpp"

namespace mngraph {

/// True iff u-w-v is a 2-path whose two labels read from w differ.
inline bool is_special_two_path(const MixedGraph& g, Vertex u, Vertex w, Vertex v) {
    if (u == w || w == v || u == v) {
        throw InputError("special 2-path needs three distinct vertices");
    }
    const auto toward_u = g.label(w, u);
    const auto toward_v = g.label(w, v);
    return toward_u && toward_v && *toward_u != *toward_v;
}

/// u sees v: adjacent, or joined by a special 2-path.
inline bool sees(const MixedGraph& g, Vertex u, Vertex v) {
    if (u == v) throw InputError("sees() needs two distinct vertices");
    if (g.adjacent(u, v)) return true;
    for (const Neighbor& nb : g.neighbors(u)) {
        const auto toward_v = g.label(nb.vertex, v);
        if (toward_v && g.alphabet().reverse(nb.label) != *toward_v) return true;
    }
    return false;
}

/// G^2: the simple graph on V(G) whose edges are the seeing pairs.
class SeeingGraph {
public:
    explicit SeeingGraph(UnderlyingGraph graph) : graph_(std::move(graph)) {}

    int vertex_count() const noexcept { return graph_.vertex_count(); }
    bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }
    const UnderlyingGraph& graph() const noexcept { return graph_; }

private:
    UnderlyingGraph graph_;
};

inline SeeingGraph seeing_graph(const MixedGraph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n) * n, 0);
    auto mark = [&](Vertex a, Vertex b) {
        seen[static_cast<std::size_t>(a) * n + b] = 1;
        seen[static_cast<std::size_t>(b) * n + a] = 1;
    };
    for (Vertex w = 0; w < n; ++w) {
        const auto row = g.neighbors(w);
        for (std::size_t i = 0; i < row.size(); ++i) {
            mark(w, row[i].vertex);
            for (std::size_t j = i + 1; j < row.size(); ++j) {
                if (row[i].label != row[j].label) mark(row[i].vertex, row[j].vertex);
            }
        }
    }
    UnderlyingGraph out(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (seen[static_cast<std::size_t>(u) * n + v]) out.add_edge(u, v);
        }
    }
    return SeeingGraph(std::move(out));
}

/// Default vertex limit for quotient (partition) searches.
inline constexpr int kDefaultPartitionLimit = 10;

/// Ground truth for "u and v can be identified by some homomorphism":
/// searches every partition of V(G) that puts u and v in one block for a
/// valid quotient, which is then an (m,n)-graph H with G -> H merging them.
inline bool mergeable_oracle(const MixedGraph& g, Vertex u, Vertex v,
                             int partition_limit = kDefaultPartitionLimit) {
    if (u == v) throw InputError("mergeable_oracle() needs two distinct vertices");
    const int n = g.vertex_count();
    if (u < 0 || v < 0 || u >= n || v >= n) throw InputError("unknown vertex");
    if (n > partition_limit) {
        throw CapacityError("partition search limited to " + std::to_string(partition_limit) +
                            " vertices, graph has " + std::to_string(n));
    }
    std::vector<Vertex> order{u, v};
    for (Vertex x = 0; x < n; ++x) {
        if (x != u && x != v) order.push_back(x);
    }
    detail::QuotientBuilder q(g);
    if (!q.place(u, 0) || !q.place(v, 0)) return false;

    auto extend = [&](auto& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        const Vertex x = order[depth];
        for (int b = 0; b <= q.block_count(); ++b) {
            if (!q.place(x, b)) continue;
            if (self(self, depth + 1)) return true;
            q.unplace();
        }
        return false;
    };
    return extend(extend, 2);
}

namespace detail {

/// Per-vertex label classes as vertex sets, the form the exact solvers use.
///
/// For every vertex w and its i-th neighbor u, `same_class(w, i)` holds
/// the neighbors of w whose label from w equals sigma(w,u). A label code of
/// 0 marks an adjacency whose label is still undecided; such a neighbor is
/// treated as distinct from every other, so seeing computed from the
/// structure over-approximates every completion.
template <class Set>
struct LabelClasses {
    int vertex_count = 0;
    std::vector<Set> adjacency;
    std::vector<std::vector<int>> neighbor_list;

    /// `codes[w][i]` is the label code of w toward neighbor_list[w][i].
    LabelClasses(int n, std::vector<std::vector<int>> neighbors, std::vector<std::vector<int>> codes)
        : vertex_count(n),
          adjacency(n, Set(n)),
          neighbor_list(std::move(neighbors)),
          codes_(std::move(codes)),
          same_class_(n) {
        for (int w = 0; w < n; ++w) {
            for (int u : neighbor_list[w]) adjacency[w].set(u);
            same_class_[w].assign(neighbor_list[w].size(), Set(n));
            rebuild(w);
        }
    }

    int code(int w, std::size_t i) const { return codes_[w][i]; }

    /// Changes the label code of w toward its i-th neighbor.
    void set_code(int w, std::size_t i, int code) {
        codes_[w][i] = code;
        rebuild(w);
    }

    static LabelClasses from(const MixedGraph& g) {
        const int n = g.vertex_count();
        std::vector<std::vector<int>> nbrs(n), codes(n);
        for (Vertex w = 0; w < n; ++w) {
            for (const Neighbor& nb : g.neighbors(w)) {
                nbrs[w].push_back(nb.vertex);
                codes[w].push_back(nb.label.value());
            }
        }
        return LabelClasses(n, std::move(nbrs), std::move(codes));
    }

    /// Seeing rows of G[within]: rows[u] = vertices of `within` that u sees
    /// using midpoints inside `within`. Rows of vertices outside are empty.
    std::vector<Set> seeing_rows(const Set& within) const {
        std::vector<Set> rows(vertex_count, Set(vertex_count));
        within.for_each([&](int w) {
            const Set local = adjacency[w] & within;
            rows[w] |= local;
            const auto& row = neighbor_list[w];
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (!within.test(row[i])) continue;
                rows[row[i]] |= local - same_class_[w][i];
            }
        });
        return rows;
    }

    const Set& same_class(int w, std::size_t i) const { return same_class_[w][i]; }

private:
    void rebuild(int w) {
        const auto& row = neighbor_list[w];
        const auto& code_row = codes_[w];
        for (std::size_t i = 0; i < row.size(); ++i) {
            Set cls(vertex_count);
            cls.set(row[i]);
            if (code_row[i] != 0) {
                for (std::size_t j = 0; j < row.size(); ++j) {
                    if (code_row[j] == code_row[i]) cls.set(row[j]);
                }
            }
            same_class_[w][i] = std::move(cls);
        }
    }

    std::vector<std::vector<int>> codes_;
    std::vector<std::vector<Set>> same_class_;
};

}  // namespace detail

}  // namespace mngraph

#endif  // MNGRAPH_SEEING_HPP
