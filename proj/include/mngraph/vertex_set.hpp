#ifndef MNGRAPH_VERTEX_SET_HPP
#define MNGRAPH_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace mngraph {

/// Vertex subset of a universe of at most 64 vertices, one machine word.
class SmallSet {
public:
    static constexpr int capacity = 64;

    SmallSet() = default;
    explicit SmallSet(int /*universe*/) {}

    static SmallSet full(int universe) {
        SmallSet s;
        s.bits_ = universe >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << universe) - 1);
        return s;
    }

    void set(int v) noexcept { bits_ |= bit(v); }
    void reset(int v) noexcept { bits_ &= ~bit(v); }
    bool test(int v) const noexcept { return (bits_ & bit(v)) != 0; }
    int count() const noexcept { return std::popcount(bits_); }
    bool none() const noexcept { return bits_ == 0; }
    bool any() const noexcept { return bits_ != 0; }

    /// Smallest member, or -1.
    int first() const noexcept { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    /// Smallest member greater than v, or -1.
    int next(int v) const noexcept {
        if (v >= 63) return -1;
        const std::uint64_t rest = bits_ & (~std::uint64_t{0} << (v + 1));
        return rest == 0 ? -1 : std::countr_zero(rest);
    }

    /// Members strictly greater than v.
    SmallSet above(int v) const noexcept {
        SmallSet s;
        s.bits_ = v >= 63 ? 0 : bits_ & (~std::uint64_t{0} << (v + 1));
        return s;
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::uint64_t rest = bits_; rest != 0; rest &= rest - 1) f(std::countr_zero(rest));
    }

    SmallSet& operator&=(const SmallSet& o) noexcept { bits_ &= o.bits_; return *this; }
    SmallSet& operator|=(const SmallSet& o) noexcept { bits_ |= o.bits_; return *this; }
    SmallSet& operator-=(const SmallSet& o) noexcept { bits_ &= ~o.bits_; return *this; }
    friend SmallSet operator&(SmallSet a, const SmallSet& b) noexcept { return a &= b; }
    friend SmallSet operator|(SmallSet a, const SmallSet& b) noexcept { return a |= b; }
    friend SmallSet operator-(SmallSet a, const SmallSet& b) noexcept { return a -= b; }
    friend bool operator==(const SmallSet&, const SmallSet&) = default;

    std::uint64_t word() const noexcept { return bits_; }

private:
    static constexpr std::uint64_t bit(int v) noexcept { return std::uint64_t{1} << v; }
    std::uint64_t bits_ = 0;
};

/// Vertex subset of an arbitrary universe.
class LargeSet {
public:
    static constexpr int capacity = 1 << 30;

    LargeSet() = default;
    explicit LargeSet(int universe) : bits_(static_cast<std::size_t>(universe)) {}

    static LargeSet full(int universe) {
        LargeSet s(universe);
        s.bits_.set();
        return s;
    }

    void set(int v) { bits_.set(static_cast<std::size_t>(v)); }
    void reset(int v) { bits_.reset(static_cast<std::size_t>(v)); }
    bool test(int v) const { return bits_.test(static_cast<std::size_t>(v)); }
    int count() const noexcept { return static_cast<int>(bits_.count()); }
    bool none() const noexcept { return bits_.none(); }
    bool any() const noexcept { return bits_.any(); }

    int first() const noexcept { return to_int(bits_.find_first()); }
    int next(int v) const noexcept { return to_int(bits_.find_next(static_cast<std::size_t>(v))); }

    LargeSet above(int v) const {
        LargeSet s = *this;
        for (int x = s.first(); x != -1 && x <= v; x = s.next(x)) s.reset(x);
        return s;
    }

    template <class F>
    void for_each(F&& f) const {
        for (auto i = bits_.find_first(); i != Bits::npos; i = bits_.find_next(i)) f(static_cast<int>(i));
    }

    LargeSet& operator&=(const LargeSet& o) { bits_ &= o.bits_; return *this; }
    LargeSet& operator|=(const LargeSet& o) { bits_ |= o.bits_; return *this; }
    LargeSet& operator-=(const LargeSet& o) { bits_ -= o.bits_; return *this; }
    friend LargeSet operator&(LargeSet a, const LargeSet& b) { return a &= b; }
    friend LargeSet operator|(LargeSet a, const LargeSet& b) { return a |= b; }
    friend LargeSet operator-(LargeSet a, const LargeSet& b) { return a -= b; }
    friend bool operator==(const LargeSet& a, const LargeSet& b) { return a.bits_ == b.bits_; }

private:
    using Bits = boost::dynamic_bitset<std::uint64_t>;
    static int to_int(Bits::size_type i) noexcept { return i == Bits::npos ? -1 : static_cast<int>(i); }
    Bits bits_;
};

template <class Set>
std::vector<int> members(const Set& s) {
    std::vector<int> out;
    s.for_each([&](int v) { out.push_back(v); });
    return out;
}

}  // namespace mngraph

#endif  // MNGRAPH_VERTEX_SET_HPP
