#include "t1rigid/vertex_set.hpp"

#include <algorithm>
#include <functional>

namespace t1rigid {

VertexSet::VertexSet(std::initializer_list<Vertex> vertices)
{
    for (Vertex v : vertices)
        insert(v);
}

VertexSet VertexSet::from_word(std::uint64_t word)
{
    VertexSet s;
    s.low_ = word;
    return s;
}

VertexSet VertexSet::from_vector(const std::vector<Vertex> & vertices)
{
    VertexSet s;
    for (Vertex v : vertices)
        s.insert(v);
    return s;
}

VertexSet VertexSet::range(Vertex count)
{
    if (count <= bits_per_word)
        return from_word(count == bits_per_word ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
    VertexSet s;
    for (Vertex v = 0; v < count; ++v)
        s.insert(v);
    return s;
}

void VertexSet::insert(Vertex v)
{
    if (v < bits_per_word) {
        low_ |= std::uint64_t{1} << v;
        return;
    }
    const std::size_t w = v / bits_per_word - 1;
    if (high_.size() <= w)
        high_.resize(w + 1, 0);
    high_[w] |= std::uint64_t{1} << (v % bits_per_word);
}

void VertexSet::erase(Vertex v)
{
    if (v < bits_per_word) {
        low_ &= ~(std::uint64_t{1} << v);
        return;
    }
    const std::size_t w = v / bits_per_word - 1;
    if (w < high_.size()) {
        high_[w] &= ~(std::uint64_t{1} << (v % bits_per_word));
        trim();
    }
}

std::size_t VertexSet::size() const
{
    std::size_t n = static_cast<std::size_t>(std::popcount(low_));
    for (std::uint64_t w : high_)
        n += static_cast<std::size_t>(std::popcount(w));
    return n;
}

bool VertexSet::is_subset_of(const VertexSet & other) const
{
    if ((low_ & ~other.low_) != 0 || high_.size() > other.high_.size())
        return false;
    for (std::size_t i = 0; i < high_.size(); ++i)
        if ((high_[i] & ~other.high_[i]) != 0)
            return false;
    return true;
}

bool VertexSet::intersects(const VertexSet & other) const
{
    if ((low_ & other.low_) != 0)
        return true;
    const std::size_t n = std::min(high_.size(), other.high_.size());
    for (std::size_t i = 0; i < n; ++i)
        if ((high_[i] & other.high_[i]) != 0)
            return true;
    return false;
}

std::optional<Vertex> VertexSet::min() const
{
    if (low_ != 0)
        return static_cast<Vertex>(std::countr_zero(low_));
    for (std::size_t i = 0; i < high_.size(); ++i)
        if (high_[i] != 0)
            return static_cast<Vertex>((i + 1) * bits_per_word + std::countr_zero(high_[i]));
    return std::nullopt;
}

std::optional<Vertex> VertexSet::max() const
{
    if (!high_.empty()) {
        const std::size_t i = high_.size() - 1;
        return static_cast<Vertex>((i + 2) * bits_per_word - 1 - std::countl_zero(high_[i]));
    }
    if (low_ != 0)
        return static_cast<Vertex>(bits_per_word - 1 - std::countl_zero(low_));
    return std::nullopt;
}

std::vector<Vertex> VertexSet::to_vector() const
{
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

VertexSet & VertexSet::operator|=(const VertexSet & other)
{
    low_ |= other.low_;
    if (high_.size() < other.high_.size())
        high_.resize(other.high_.size(), 0);
    for (std::size_t i = 0; i < other.high_.size(); ++i)
        high_[i] |= other.high_[i];
    return *this;
}

VertexSet & VertexSet::operator&=(const VertexSet & other)
{
    low_ &= other.low_;
    if (high_.size() > other.high_.size())
        high_.resize(other.high_.size());
    for (std::size_t i = 0; i < high_.size(); ++i)
        high_[i] &= other.high_[i];
    trim();
    return *this;
}

VertexSet & VertexSet::operator-=(const VertexSet & other)
{
    low_ &= ~other.low_;
    const std::size_t n = std::min(high_.size(), other.high_.size());
    for (std::size_t i = 0; i < n; ++i)
        high_[i] &= ~other.high_[i];
    trim();
    return *this;
}

std::size_t VertexSet::hash() const
{
    std::size_t h = std::hash<std::uint64_t>{}(low_);
    for (std::uint64_t w : high_)
        h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

void VertexSet::trim()
{
    while (!high_.empty() && high_.back() == 0)
        high_.pop_back();
}

bool lex_less(const VertexSet & a, const VertexSet & b)
{
    // Below the smallest element of the symmetric difference both sequences
    // agree. If that element m belongs to a, then a < b iff b continues past m.
    const VertexSet diff = (a - b) | (b - a);
    const auto m = diff.min();
    if (!m)
        return false;
    if (a.contains(*m)) {
        const auto bmax = b.max();
        return bmax && *bmax > *m;
    }
    const auto amax = a.max();
    return !(amax && *amax > *m);
}

bool graded_less(const VertexSet & a, const VertexSet & b)
{
    const std::size_t sa = a.size(), sb = b.size();
    if (sa != sb)
        return sa < sb;
    return lex_less(a, b);
}

void sort_unique(std::vector<VertexSet> & sets)
{
    std::sort(sets.begin(), sets.end(), LexLess{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

std::vector<VertexSet> maximal_elements(std::vector<VertexSet> sets)
{
    sort_unique(sets);
    std::stable_sort(sets.begin(), sets.end(),
                     [](const VertexSet & a, const VertexSet & b) { return a.size() > b.size(); });
    std::vector<VertexSet> kept;
    for (auto & s : sets) {
        const bool absorbed = std::any_of(kept.begin(), kept.end(),
                                          [&](const VertexSet & k) { return s.is_subset_of(k); });
        if (!absorbed)
            kept.push_back(std::move(s));
    }
    std::sort(kept.begin(), kept.end(), LexLess{});
    return kept;
}

std::vector<VertexSet> minimal_elements(std::vector<VertexSet> sets)
{
    sort_unique(sets);
    std::stable_sort(sets.begin(), sets.end(),
                     [](const VertexSet & a, const VertexSet & b) { return a.size() < b.size(); });
    std::vector<VertexSet> kept;
    for (auto & s : sets) {
        const bool absorbed = std::any_of(kept.begin(), kept.end(),
                                          [&](const VertexSet & k) { return k.is_subset_of(s); });
        if (!absorbed)
            kept.push_back(std::move(s));
    }
    std::sort(kept.begin(), kept.end(), LexLess{});
    return kept;
}

} // namespace t1rigid
