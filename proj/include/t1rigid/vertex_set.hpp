#ifndef T1RIGID_VERTEX_SET_HPP
#define T1RIGID_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

namespace t1rigid {

using Vertex = std::uint32_t;

/**
 * A finite set of vertex identifiers, stored as a bitmask.
 *
 * Identifiers 0..63 live in a single inline word, so every set over a
 * ground set of at most 64 identifiers is one machine word and copies
 * never allocate. Larger identifiers spill into a trimmed word vector;
 * trailing zero words are never stored, which keeps equality structural.
 *
 * Iteration is always in ascending identifier order.
 */
class VertexSet
{
public:
    static constexpr unsigned bits_per_word = 64;

    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vertices);

    static VertexSet from_word(std::uint64_t word);
    static VertexSet from_vector(const std::vector<Vertex> & vertices);
    /// {0, 1, ..., count - 1}
    static VertexSet range(Vertex count);

    bool contains(Vertex v) const
    {
        if (v < bits_per_word)
            return (low_ >> v) & 1u;
        const std::size_t w = v / bits_per_word - 1;
        return w < high_.size() && ((high_[w] >> (v % bits_per_word)) & 1u);
    }

    void insert(Vertex v);
    void erase(Vertex v);

    std::size_t size() const;
    bool empty() const { return low_ == 0 && high_.empty(); }

    bool is_subset_of(const VertexSet & other) const;
    bool intersects(const VertexSet & other) const;

    std::optional<Vertex> min() const;
    std::optional<Vertex> max() const;

    std::vector<Vertex> to_vector() const;

    /// True when every member is below 64.
    bool fits_word() const { return high_.empty(); }
    std::uint64_t low_word() const { return low_; }

    template <class Fn>
    void for_each(Fn && fn) const
    {
        for (std::uint64_t w = low_; w != 0; w &= w - 1)
            fn(static_cast<Vertex>(std::countr_zero(w)));
        for (std::size_t i = 0; i < high_.size(); ++i)
            for (std::uint64_t w = high_[i]; w != 0; w &= w - 1)
                fn(static_cast<Vertex>((i + 1) * bits_per_word + std::countr_zero(w)));
    }

    VertexSet & operator|=(const VertexSet & other);
    VertexSet & operator&=(const VertexSet & other);
    /// Set difference.
    VertexSet & operator-=(const VertexSet & other);

    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }

    friend bool operator==(const VertexSet & a, const VertexSet & b)
    {
        return a.low_ == b.low_ && a.high_ == b.high_;
    }

    std::size_t hash() const;

private:
    void trim();

    std::uint64_t low_ = 0;
    std::vector<std::uint64_t> high_;
};

using Face = VertexSet;

/// Lexicographic order on the ascending identifier sequences ({1} < {1,2} < {2}).
bool lex_less(const VertexSet & a, const VertexSet & b);

/// Cardinality first, then lexicographic.
bool graded_less(const VertexSet & a, const VertexSet & b);

struct LexLess
{
    bool operator()(const VertexSet & a, const VertexSet & b) const { return lex_less(a, b); }
};

struct GradedLess
{
    bool operator()(const VertexSet & a, const VertexSet & b) const { return graded_less(a, b); }
};

struct VertexSetHash
{
    std::size_t operator()(const VertexSet & s) const { return s.hash(); }
};

/// Sorts with lex_less and drops duplicates.
void sort_unique(std::vector<VertexSet> & sets);

/// Keeps the inclusion-maximal members, sorted with lex_less.
std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets);

/// Keeps the inclusion-minimal members, sorted with lex_less.
std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets);

} // namespace t1rigid

#endif
