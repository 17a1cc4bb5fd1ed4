#ifndef MNGRAPH_DETAIL_CLIQUE_HPP
#define MNGRAPH_DETAIL_CLIQUE_HPP

#include <vector>

#include "mngraph/seeing.hpp"
#include "mngraph/vertex_set.hpp"

namespace mngraph::detail {

/// Number of colors used by greedy sequential coloring of `candidates` in
/// increasing vertex order; an upper bound on the clique number there.
template <class Set>
int greedy_color_bound(const std::vector<Set>& adjacency, const Set& candidates, int universe) {
    std::vector<Set> classes;
    candidates.for_each([&](int v) {
        for (Set& cls : classes) {
            if ((cls & adjacency[v]).none()) {
                cls.set(v);
                return;
            }
        }
        Set fresh(universe);
        fresh.set(v);
        classes.push_back(std::move(fresh));
    });
    return static_cast<int>(classes.size());
}

/// Exact maximum clique by branch and bound.
///
/// Cliques are grown as increasing vertex sequences in lexicographic order
/// and a branch is cut only when its coloring bound cannot beat the best
/// size so far, so the returned clique is the lexicographically least among
/// all maximum cliques.
template <class Set>
class MaxClique {
public:
    MaxClique(const std::vector<Set>& adjacency, int universe) : adjacency_(adjacency), universe_(universe) {}

    /// Returns the lexicographically least maximum clique if its size
    /// exceeds `floor`, otherwise an empty vector.
    std::vector<int> solve(const Set& candidates, int floor = 0) {
        best_.clear();
        best_size_ = static_cast<std::size_t>(floor);
        current_.clear();
        expand(candidates);
        return best_;
    }

private:
    void expand(const Set& candidates) {
        if (candidates.none()) {
            if (current_.size() > best_size_) {
                best_ = current_;
                best_size_ = current_.size();
            }
            return;
        }
        // suffix_bound[k] bounds the clique number of the members >= k-th.
        const std::vector<int> order = members(candidates);
        std::vector<int> suffix_bound(order.size());
        std::vector<Set> classes;
        for (std::size_t k = order.size(); k-- > 0;) {
            const int v = order[k];
            bool placed = false;
            for (Set& cls : classes) {
                if ((cls & adjacency_[v]).none()) {
                    cls.set(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                Set fresh(universe_);
                fresh.set(v);
                classes.push_back(std::move(fresh));
            }
            suffix_bound[k] = static_cast<int>(classes.size());
        }
        for (std::size_t k = 0; k < order.size(); ++k) {
            if (current_.size() + suffix_bound[k] <= best_size_) return;
            const int v = order[k];
            current_.push_back(v);
            expand(candidates.above(v) & adjacency_[v]);
            current_.pop_back();
        }
    }

    const std::vector<Set>& adjacency_;
    int universe_;
    std::vector<int> best_;
    std::size_t best_size_ = 0;
    std::vector<int> current_;
};

/// Exact maximum subset S whose members pairwise see each other through
/// midpoints inside S.
///
/// A subproblem is a pool S with a forced core F. Any answer inside S is a
/// clique of the seeing graph of G[S], so vertices a forced vertex does not
/// see inside S are dropped, and the seeing graph of G[S] is recomputed
/// until stable. Branching on a vertex a either forces it (restricting S to
/// what a sees in G[S]) or removes it.
template <class Set>
class AbsoluteCliqueSearch {
public:
    explicit AbsoluteCliqueSearch(const LabelClasses<Set>& classes) : classes_(classes), best_(classes.vertex_count) {}

    /// Returns the best set found of size > floor, or an empty set.
    Set solve(int floor = 0) {
        best_size_ = floor;
        best_ = Set(classes_.vertex_count);
        const int n = classes_.vertex_count;
        search(Set::full(n), Set(n));
        return best_;
    }

    int best_size() const { return best_size_; }

private:
    void search(Set pool, Set forced) {
        const int n = classes_.vertex_count;
        std::vector<Set> rows;
        for (;;) {
            if (pool.count() <= best_size_) return;
            rows = classes_.seeing_rows(pool);
            Set drop(n);
            bool conflict = false;
            forced.for_each([&](int f) {
                Set missing = pool - rows[f];
                missing.reset(f);
                if ((missing & forced).any()) conflict = true;
                drop |= missing;
            });
            if (conflict) return;
            if (drop.none()) break;
            pool -= drop;
        }

        int branch = -1;
        int fewest = n + 1;
        bool complete = true;
        pool.for_each([&](int v) {
            const int seen = (rows[v] & pool).count();
            if (seen + 1 < pool.count()) {
                complete = false;
                if (!forced.test(v) && seen < fewest) {
                    fewest = seen;
                    branch = v;
                }
            }
        });
        if (complete) {
            best_size_ = pool.count();
            best_ = pool;
            return;
        }
        if (greedy_color_bound(rows, pool, n) <= best_size_) return;

        Set keep = (rows[branch] & pool);
        keep.set(branch);
        Set with = forced;
        with.set(branch);
        search(keep, with);
        Set without = pool;
        without.reset(branch);
        search(without, forced);
    }

    const LabelClasses<Set>& classes_;
    Set best_;
    int best_size_ = 0;
};

}  // namespace mngraph::detail

#endif  // MNGRAPH_DETAIL_CLIQUE_HPP
