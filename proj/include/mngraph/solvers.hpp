#ifndef MNGRAPH_SOLVERS_HPP
#define MNGRAPH_SOLVERS_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include "mngraph/detail/clique.hpp"
#include "mngraph/detail/quotient.hpp"
#include "mngraph/error.hpp"
#include "mngraph/graph.hpp"
#include "mngraph/seeing.hpp"
#include "mngraph/vertex_set.hpp"

namespace mngraph {

/// Size limits for the exponential searches.
struct Limits {
    int max_partition_vertices = kDefaultPartitionLimit;
    int max_search_edges = 16;
};

struct CliqueResult {
    int value = 0;
    std::vector<Vertex> witness;  // sorted
};

namespace detail {

template <class Set>
CliqueResult relative_clique_with(const MixedGraph& g) {
    const int n = g.vertex_count();
    const auto classes = LabelClasses<Set>::from(g);
    const auto rows = classes.seeing_rows(Set::full(n));
    MaxClique<Set> solver(rows, n);
    auto witness = solver.solve(Set::full(n));
    return {static_cast<int>(witness.size()), std::move(witness)};
}

template <class Set>
CliqueResult absolute_clique_with(const MixedGraph& g) {
    const auto classes = LabelClasses<Set>::from(g);
    AbsoluteCliqueSearch<Set> solver(classes);
    const Set best = solver.solve();
    auto witness = members(best);
    return {static_cast<int>(witness.size()), std::move(witness)};
}

}  // namespace detail

/// omega_r(G): the maximum clique of the seeing graph. The witness is the
/// lexicographically least maximum pairwise-seeing set.
inline CliqueResult relative_clique_number(const MixedGraph& g) {
    if (g.vertex_count() <= SmallSet::capacity) return detail::relative_clique_with<SmallSet>(g);
    return detail::relative_clique_with<LargeSet>(g);
}

/// omega_a(G): the largest S such that G[S] is an absolute clique, i.e. every
/// pair of S sees each other through midpoints inside S.
inline CliqueResult absolute_clique_number(const MixedGraph& g) {
    if (g.vertex_count() <= SmallSet::capacity) return detail::absolute_clique_with<SmallSet>(g);
    return detail::absolute_clique_with<LargeSet>(g);
}

/// True iff every pair of distinct vertices of G sees each other in G.
inline bool is_absolute_clique(const MixedGraph& g) {
    const SeeingGraph g2 = seeing_graph(g);
    const long long n = g.vertex_count();
    return g2.graph().edge_count() == n * (n - 1) / 2;
}

struct ChromaticResult {
    int value = 0;
    std::vector<int> blocks;  // block index per vertex, blocks numbered by first appearance
};

/// chi_{m,n}(G) as the minimum number of blocks of a valid quotient.
inline ChromaticResult chromatic_number(const MixedGraph& g, const Limits& limits = {}) {
    const int n = g.vertex_count();
    if (n > limits.max_partition_vertices) {
        throw CapacityError("partition search limited to " + std::to_string(limits.max_partition_vertices) +
                            " vertices, graph has " + std::to_string(n));
    }
    ChromaticResult best{n, {}};
    best.blocks.resize(n);
    for (int v = 0; v < n; ++v) best.blocks[v] = v;

    detail::QuotientBuilder q(g);
    auto extend = [&](auto& self, Vertex v) -> void {
        if (v == n) {
            if (q.block_count() < best.value) {
                best.value = q.block_count();
                best.blocks = q.blocks();
            }
            return;
        }
        const int open = q.block_count();
        for (int b = 0; b <= open; ++b) {
            if (b == open && open + 1 >= best.value) break;
            if (!q.place(v, b)) continue;
            self(self, v + 1);
            q.unplace();
        }
    };
    extend(extend, 0);
    return best;
}

enum class Objective { relative, absolute };

struct SearchOutcome {
    int best_value = 0;
    Labeling best_labeling;
    std::uint64_t explored = 0;  // complete labelings evaluated after pruning
};

struct SearchOptions {
    Limits limits;
    int threads = 1;
    bool use_symmetry = true;
};

namespace detail {

/// Permutations of the adjacency types that preserve seeing: arc types
/// permuted among themselves, each optionally reversed, and edge types
/// permuted among themselves. The identity is excluded.
inline std::vector<std::vector<int>> label_symmetries(int m, int n, std::size_t cap = 50000) {
    auto factorial = [](int k) {
        std::size_t f = 1;
        for (int i = 2; i <= k; ++i) f *= static_cast<std::size_t>(i);
        return f;
    };
    if (m > 8 || n > 8 || factorial(m) * (std::size_t{1} << m) * factorial(n) > cap) return {};
    std::vector<int> arc_perm(m), edge_perm(n);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < m; ++i) arc_perm[i] = i;
    do {
        for (unsigned flips = 0; flips < (1u << m); ++flips) {
            for (int j = 0; j < n; ++j) edge_perm[j] = j;
            do {
                std::vector<int> map(2 * m + n);
                for (int i = 0; i < m; ++i) {
                    const bool flip = (flips >> i) & 1u;
                    map[i] = flip ? m + arc_perm[i] : arc_perm[i];
                    map[m + i] = flip ? arc_perm[i] : m + arc_perm[i];
                }
                for (int j = 0; j < n; ++j) map[2 * m + j] = 2 * m + edge_perm[j];
                bool identity = true;
                for (int t = 0; t < 2 * m + n; ++t) identity = identity && map[t] == t;
                if (!identity) out.push_back(std::move(map));
            } while (std::next_permutation(edge_perm.begin(), edge_perm.end()));
        }
    } while (std::next_permutation(arc_perm.begin(), arc_perm.end()));
    return out;
}

/// Depth-first labeling search over one underlying graph, one instance per
/// worker. Undecided edges carry label code 0, which the objective treats as
/// "special toward everything", so every node's value bounds all of its
/// completions.
class LabelingSearcher {
public:
    struct ShardResult {
        int best_value = -1;
        std::vector<int> best_types;
        std::uint64_t explored = 0;
    };

    LabelingSearcher(const UnderlyingGraph& u, LabelAlphabet alphabet, Objective objective,
                     const std::vector<std::vector<int>>& symmetries)
        : alphabet_(alphabet),
          objective_(objective),
          symmetries_(symmetries),
          edges_(u.edges()),
          classes_(make_classes(u)),
          types_(edges_.size(), -1) {
        const int n = u.vertex_count();
        slot_.resize(edges_.size());
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            slot_[e].first = index_in(classes_.neighbor_list[edges_[e].u], edges_[e].v);
            slot_[e].second = index_in(classes_.neighbor_list[edges_[e].v], edges_[e].u);
        }
        full_ = SmallSet::full(n);
    }

    std::size_t edge_count() const { return edges_.size(); }

    /// Objective value of the current partial labeling if it exceeds floor,
    /// otherwise floor.
    int evaluate(int floor) const {
        const int n = classes_.vertex_count;
        if (objective_ == Objective::relative) {
            const auto rows = classes_.seeing_rows(full_);
            MaxClique<SmallSet> solver(rows, n);
            const auto clique = solver.solve(full_, std::max(floor, 0));
            return clique.empty() ? floor : static_cast<int>(clique.size());
        }
        {
            // The relative value bounds the absolute one and is cheaper.
            const auto rows = classes_.seeing_rows(full_);
            MaxClique<SmallSet> bound(rows, n);
            if (bound.solve(full_, std::max(floor, 0)).empty()) return floor;
        }
        AbsoluteCliqueSearch<SmallSet> solver(classes_);
        const SmallSet best = solver.solve(std::max(floor, 0));
        return best.none() ? floor : best.count();
    }

    void assign(std::size_t e, int type) {
        types_[e] = type;
        const SignedLabel forward = alphabet_.label_of_type(type);
        classes_.set_code(edges_[e].u, slot_[e].first, forward.value());
        classes_.set_code(edges_[e].v, slot_[e].second, alphabet_.reverse(forward).value());
    }

    void unassign(std::size_t e) {
        types_[e] = -1;
        classes_.set_code(edges_[e].u, slot_[e].first, 0);
        classes_.set_code(edges_[e].v, slot_[e].second, 0);
    }

    /// Canonical prefixes of the given length in lexicographic order.
    std::vector<std::vector<int>> canonical_prefixes(std::size_t length) const {
        std::vector<std::vector<int>> out;
        std::vector<int> prefix;
        std::vector<char> equal(symmetries_.size(), 1);
        auto walk = [&](auto& self, std::vector<char> eq) -> void {
            if (prefix.size() == length) {
                out.push_back(prefix);
                return;
            }
            for (int t = 0; t < alphabet_.type_count(); ++t) {
                std::vector<char> next = eq;
                if (!advance(next, t)) continue;
                prefix.push_back(t);
                self(self, std::move(next));
                prefix.pop_back();
            }
        };
        walk(walk, equal);
        return out;
    }

    ShardResult run_shard(const std::vector<int>& prefix) {
        ShardResult result;
        std::vector<char> equal(symmetries_.size(), 1);
        for (std::size_t e = 0; e < prefix.size(); ++e) {
            advance(equal, prefix[e]);
            assign(e, prefix[e]);
        }
        if (prefix.size() == edges_.size()) {
            result.explored = 1;
            result.best_value = evaluate(-1);
            result.best_types = types_;
        } else {
            descend(prefix.size(), std::move(equal), result);
        }
        for (std::size_t e = 0; e < prefix.size(); ++e) unassign(e);
        return result;
    }

private:
    static LabelClasses<SmallSet> make_classes(const UnderlyingGraph& u) {
        const int n = u.vertex_count();
        std::vector<std::vector<int>> nbrs(n), codes(n);
        for (Vertex v = 0; v < n; ++v) {
            for (Vertex w : u.neighbors(v)) {
                nbrs[v].push_back(w);
                codes[v].push_back(0);
            }
        }
        return LabelClasses<SmallSet>(n, std::move(nbrs), std::move(codes));
    }

    static std::size_t index_in(const std::vector<int>& row, int v) {
        return static_cast<std::size_t>(std::find(row.begin(), row.end(), v) - row.begin());
    }

    // Updates the per-symmetry "image equals prefix so far" flags for the
    // next type; false when the extended prefix has a lexicographically
    // smaller image, i.e. it is not canonical.
    bool advance(std::vector<char>& equal, int type) const {
        for (std::size_t s = 0; s < symmetries_.size(); ++s) {
            if (!equal[s]) continue;
            const int image = symmetries_[s][type];
            if (image < type) return false;
            if (image > type) equal[s] = 0;
        }
        return true;
    }

    void descend(std::size_t depth, std::vector<char> equal, ShardResult& result) {
        const bool last = depth + 1 == edges_.size();
        for (int t = 0; t < alphabet_.type_count(); ++t) {
            std::vector<char> next = equal;
            if (!advance(next, t)) continue;
            assign(depth, t);
            const int value = evaluate(result.best_value);
            if (last) {
                ++result.explored;
                if (value > result.best_value) {
                    result.best_value = value;
                    result.best_types = types_;
                }
            } else if (value > result.best_value) {
                descend(depth + 1, std::move(next), result);
            }
            unassign(depth);
        }
    }

    LabelAlphabet alphabet_;
    Objective objective_;
    const std::vector<std::vector<int>>& symmetries_;
    std::vector<Edge> edges_;
    LabelClasses<SmallSet> classes_;
    std::vector<int> types_;
    std::vector<std::pair<std::size_t, std::size_t>> slot_;
    SmallSet full_;
};

}  // namespace detail

/// Maximum of the objective over all (2m+n)^|E| labelings of U.
///
/// The best labeling reported is the lexicographically least optimal one
/// (types compared edge by edge in UnderlyingGraph::edges() order). Work is
/// split into fixed shards by the labels of the first few edges, so values
/// and the explored count do not depend on the thread count.
inline SearchOutcome labeling_search(const UnderlyingGraph& u, int m, int n, Objective objective,
                                     const SearchOptions& options = {}) {
    if (m < 0 || n < 0) throw InputError("m and n must be non-negative");
    const int edges = u.edge_count();
    if (edges > options.limits.max_search_edges) {
        throw CapacityError("labeling search limited to " + std::to_string(options.limits.max_search_edges) +
                            " edges, graph has " + std::to_string(edges));
    }
    if (u.vertex_count() > SmallSet::capacity) {
        throw CapacityError("labeling search limited to 64 vertices");
    }
    const LabelAlphabet alphabet{m, n};
    const int p = alphabet.type_count();
    if (edges > 0 && p == 0) throw InputError("(m,n) = (0,0) has no adjacency types");

    const auto symmetries =
        options.use_symmetry ? detail::label_symmetries(m, n) : std::vector<std::vector<int>>{};
    detail::LabelingSearcher root(u, alphabet, objective, symmetries);
    if (edges == 0) {
        return {root.evaluate(-1), Labeling{}, 1};
    }
    const int ceiling = root.evaluate(-1);

    std::size_t depth = 1;
    for (long long shards = p; shards < 64 && depth < static_cast<std::size_t>(edges); shards *= p) ++depth;
    const auto prefixes = root.canonical_prefixes(depth);

    std::vector<detail::LabelingSearcher::ShardResult> results(prefixes.size());
    // Index of the first shard that reached the ceiling; later shards cannot
    // change the outcome.
    std::atomic<std::size_t> cutoff{std::numeric_limits<std::size_t>::max()};
    std::atomic<std::size_t> next{0};
    std::vector<char> done(prefixes.size(), 0);

    auto worker = [&]() {
        detail::LabelingSearcher searcher(u, alphabet, objective, symmetries);
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) return;
            if (i > cutoff.load()) continue;
            results[i] = searcher.run_shard(prefixes[i]);
            done[i] = 1;
            if (results[i].best_value >= ceiling) {
                std::size_t seen = cutoff.load();
                while (i < seen && !cutoff.compare_exchange_weak(seen, i)) {
                }
            }
        }
    };
    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SearchOutcome out;
    out.best_value = -1;
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        if (!done[i]) break;  // only shards past the cutoff are skipped
        out.explored += results[i].explored;
        if (results[i].best_value > out.best_value) {
            out.best_value = results[i].best_value;
            out.best_labeling.types = results[i].best_types;
        }
        if (results[i].best_value >= ceiling) break;
    }
    return out;
}

}  // namespace mngraph

#endif  // MNGRAPH_SOLVERS_HPP
