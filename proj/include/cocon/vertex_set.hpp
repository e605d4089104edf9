#ifndef COCON_VERTEX_SET_HPP
#define COCON_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace cocon {

using Vertex = int;

/// Largest vertex universe supported by the bitmask representation.
inline constexpr int kMaxVertices = 64;

/**
 * A set of vertex ids in [0, 64), stored as a bitmask.
 *
 * Iteration is ascending by id. Ordering via lex_less() compares the
 * ascending member lists lexicographically, which is the order used for
 * every sorted facet/circuit list in the library.
 */
class VertexSet {
public:
    constexpr VertexSet() = default;
    explicit constexpr VertexSet(std::uint64_t bits) : bits_(bits) {}

    VertexSet(std::initializer_list<Vertex> members)
    {
        for (Vertex v : members) insert(v);
    }

    static VertexSet from_vector(const std::vector<Vertex>& members)
    {
        VertexSet s;
        for (Vertex v : members) s.insert(v);
        return s;
    }

    /// {0, 1, ..., n-1}
    static constexpr VertexSet range(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    static constexpr VertexSet singleton(Vertex v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }

    void insert(Vertex v)
    {
        check_id(v);
        bits_ |= std::uint64_t{1} << v;
    }
    void erase(Vertex v)
    {
        check_id(v);
        bits_ &= ~(std::uint64_t{1} << v);
    }

    constexpr VertexSet with(Vertex v) const { return VertexSet(bits_ | (std::uint64_t{1} << v)); }
    constexpr VertexSet without(Vertex v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << v)); }

    /// Smallest member; undefined on the empty set.
    constexpr Vertex min() const { return std::countr_zero(bits_); }
    constexpr Vertex max() const { return 63 - std::countl_zero(bits_); }

    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet operator^(VertexSet o) const { return VertexSet(bits_ ^ o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    constexpr bool operator==(const VertexSet&) const = default;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        using pointer = const Vertex*;
        using reference = Vertex;

        constexpr iterator() = default;
        explicit constexpr iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++()
        {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int)
        {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

    /// "{0,3,4}"
    std::string to_string(int offset = 0) const
    {
        std::string out = "{";
        bool first = true;
        for (Vertex v : *this) {
            if (!first) out += ',';
            out += std::to_string(v + offset);
            first = false;
        }
        return out + "}";
    }

private:
    static void check_id(Vertex v)
    {
        if (v < 0 || v >= kMaxVertices) throw std::out_of_range("vertex id out of range: " + std::to_string(v));
    }

    std::uint64_t bits_ = 0;
};

/// Lexicographic order on ascending member lists ({0,1} < {0,1,5} < {0,2} < {1}).
constexpr bool lex_less(VertexSet a, VertexSet b)
{
    const std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    const int v = std::countr_zero(diff);
    const std::uint64_t above = v == 63 ? 0 : ~((std::uint64_t{2} << v) - 1);
    if (a.contains(v)) return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
}

struct LexLess {
    constexpr bool operator()(VertexSet a, VertexSet b) const { return lex_less(a, b); }
};

struct VertexSetHash {
    std::size_t operator()(VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};

/// Hash for a list of sets (memo keys over facet or circuit families).
struct SetListHash {
    std::size_t operator()(const std::vector<VertexSet>& sets) const noexcept
    {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ sets.size();
        for (VertexSet s : sets) {
            h ^= s.bits() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

/// Calls fn on every k-subset of `pool`, in lexicographic order. A bool-returning fn stops the walk by returning false.
template <typename Fn>
void for_each_k_subset(VertexSet pool, int k, Fn&& fn)
{
    const std::vector<Vertex> members = pool.to_vector();
    const int n = static_cast<int>(members.size());
    if (k < 0 || k > n) return;
    if (k == 0) {
        fn(VertexSet{});
        return;
    }
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        VertexSet s;
        for (int i : idx) s = s.with(members[i]);
        if constexpr (std::is_same_v<std::invoke_result_t<Fn, VertexSet>, bool>) {
            if (!fn(s)) return;
        } else {
            fn(s);
        }
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace cocon

#endif
