#ifndef MNGRAPH_RANDOM_HPP
#define MNGRAPH_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>

#include "mngraph/error.hpp"
#include "mngraph/graph.hpp"

namespace mngraph {

/// Seeded generator with draws that are identical on every platform (the
/// standard distributions are implementation-defined, the engine is not).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound), bound > 0, by rejection.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw InputError("empty range");
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % bound;
        for (;;) {
            const std::uint64_t x = engine_();
            if (x < limit) return x % bound;
        }
    }

    /// Uniform in [lo, hi].
    int between(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

    bool chance_permille(int permille) { return static_cast<int>(below(1000)) < permille; }

private:
    std::mt19937_64 engine_;
};

/// Erdos-Renyi graph, each pair present with probability permille/1000.
inline UnderlyingGraph random_graph(Rng& rng, int vertices, int permille) {
    UnderlyingGraph g(vertices);
    for (Vertex u = 0; u < vertices; ++u) {
        for (Vertex v = u + 1; v < vertices; ++v) {
            if (rng.chance_permille(permille)) g.add_edge(u, v);
        }
    }
    return g;
}

/// Erdos-Renyi samples redrawn until the maximum degree is <= max_degree.
inline UnderlyingGraph random_graph_max_degree(Rng& rng, int vertices, int permille, int max_degree) {
    for (;;) {
        UnderlyingGraph g = random_graph(rng, vertices, permille);
        if (g.max_degree() <= max_degree) return g;
    }
}

/// Every edge gets a uniformly random adjacency type.
inline Labeling random_labeling(Rng& rng, const UnderlyingGraph& u, int m, int n) {
    const int p = 2 * m + n;
    if (p == 0 && u.edge_count() > 0) throw InputError("(m,n) = (0,0) admits no adjacency types");
    Labeling out;
    for (int i = 0; i < u.edge_count(); ++i) out.types.push_back(static_cast<int>(rng.below(p)));
    return out;
}

inline MixedGraph random_mixed_graph(Rng& rng, const UnderlyingGraph& u, int m, int n) {
    return apply_labeling(u, m, n, random_labeling(rng, u, m, n));
}

}  // namespace mngraph

#endif  // MNGRAPH_RANDOM_HPP
