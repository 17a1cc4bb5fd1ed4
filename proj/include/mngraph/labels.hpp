#ifndef MNGRAPH_LABELS_HPP
#define MNGRAPH_LABELS_HPP

#include <compare>
#include <cstdlib>
#include <string>

#include "mngraph/error.hpp"

namespace mngraph {

/// Signed adjacency label read from one endpoint toward the other.
///
/// Arc labels are 1..m when read along the arc and -1..-m when read against
/// it; edge labels m+1..m+n read the same from both ends. Zero is never a
/// label.
class SignedLabel {
public:
    constexpr explicit SignedLabel(int value) : value_(value) {
        if (value == 0) {
            throw InputError("adjacency label must be nonzero");
        }
    }

    constexpr int value() const noexcept { return value_; }

    friend constexpr auto operator<=>(SignedLabel, SignedLabel) = default;

private:
    int value_;
};

/// The label alphabet of an (m,n)-graph and its canonical type ordering.
///
/// Adjacency types are indexed 0..p-1 with p = 2m+n: indices 0..m-1 are
/// outgoing arcs 1..m, indices m..2m-1 are incoming arcs (labels -1..-m),
/// and the remaining n indices are the edge labels m+1..m+n.
struct LabelAlphabet {
    int m = 0;
    int n = 0;

    constexpr int type_count() const noexcept { return 2 * m + n; }

    constexpr bool valid(SignedLabel label) const noexcept {
        const int v = label.value();
        return v < 0 ? -v <= m : v <= m + n;
    }

    constexpr bool is_arc(SignedLabel label) const noexcept {
        return std::abs(label.value()) <= m;
    }

    /// The label of the same adjacency read from the other endpoint.
    constexpr SignedLabel reverse(SignedLabel label) const noexcept {
        return is_arc(label) ? SignedLabel(-label.value()) : label;
    }

    constexpr SignedLabel label_of_type(int type) const {
        if (type < 0 || type >= type_count()) {
            throw InputError("adjacency type " + std::to_string(type) + " out of range for p = " +
                             std::to_string(type_count()));
        }
        if (type < m) return SignedLabel(type + 1);
        if (type < 2 * m) return SignedLabel(-(type - m + 1));
        return SignedLabel(type - m + 1);
    }

    constexpr int type_of_label(SignedLabel label) const {
        if (!valid(label)) {
            throw InputError("label " + std::to_string(label.value()) + " out of range for (m,n) = (" +
                             std::to_string(m) + "," + std::to_string(n) + ")");
        }
        const int v = label.value();
        if (v < 0) return m + (-v - 1);
        if (v <= m) return v - 1;
        return v - 1 + m;
    }

    friend constexpr bool operator==(const LabelAlphabet&, const LabelAlphabet&) = default;
};

}  // namespace mngraph

#endif  // MNGRAPH_LABELS_HPP
