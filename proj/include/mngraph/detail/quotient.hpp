#ifndef MNGRAPH_DETAIL_QUOTIENT_HPP
#define MNGRAPH_DETAIL_QUOTIENT_HPP

#include <vector>

#include "mngraph/graph.hpp"

namespace mngraph::detail {

/// Incremental valid-quotient builder over restricted growth strings.
///
/// A partition of V(G) is a valid quotient iff no block holds an adjacent
/// pair and every ordered pair of blocks carries at most one signed label.
/// Vertices are placed in `order`; `between[b*N + c]` is the label read from
/// block b toward block c (0 when no adjacency yet).
class QuotientBuilder {
public:
    explicit QuotientBuilder(const MixedGraph& g)
        : g_(g), n_(g.vertex_count()), block_(n_, -1), between_(static_cast<std::size_t>(n_) * n_, 0) {}

    int block_of(Vertex v) const { return block_[v]; }
    int block_count() const { return blocks_; }

    /// Places v into block b (b == block_count() opens a new block). On
    /// failure nothing changes.
    bool place(Vertex v, int b) {
        const std::size_t mark = undo_.size();
        for (const Neighbor& nb : g_.neighbors(v)) {
            const int c = block_[nb.vertex];
            if (c < 0) continue;
            if (c == b) {
                rollback(mark);
                return false;
            }
            const int want = nb.label.value();
            int& forward = between_[index(b, c)];
            if (forward == 0) {
                forward = want;
                between_[index(c, b)] = g_.alphabet().reverse(nb.label).value();
                undo_.push_back(index(b, c));
                undo_.push_back(index(c, b));
            } else if (forward != want) {
                rollback(mark);
                return false;
            }
        }
        const bool opens = b == blocks_;
        block_[v] = b;
        if (opens) ++blocks_;
        frames_.push_back({v, mark, opens});
        return true;
    }

    /// Undoes the most recent successful place().
    void unplace() {
        const Frame f = frames_.back();
        frames_.pop_back();
        rollback(f.undo_mark);
        if (f.opened_block) --blocks_;
        block_[f.vertex] = -1;
    }

    std::vector<int> blocks() const { return block_; }

private:
    struct Frame {
        Vertex vertex;
        std::size_t undo_mark;
        bool opened_block;
    };

    std::size_t index(int b, int c) const { return static_cast<std::size_t>(b) * n_ + c; }

    void rollback(std::size_t mark) {
        while (undo_.size() > mark) {
            between_[undo_.back()] = 0;
            undo_.pop_back();
        }
    }

    const MixedGraph& g_;
    int n_;
    std::vector<int> block_;
    std::vector<int> between_;
    std::vector<std::size_t> undo_;
    std::vector<Frame> frames_;
    int blocks_ = 0;
};

}  // namespace mngraph::detail

#endif  // MNGRAPH_DETAIL_QUOTIENT_HPP
