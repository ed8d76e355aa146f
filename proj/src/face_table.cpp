#include "t1rigid/detail/face_table.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace t1rigid::detail {

namespace {

// Mask is 32 bits and the table holds one byte per subset.
constexpr std::size_t hard_width_limit = 30;

std::uint32_t find_root(std::vector<std::uint32_t> & parent, std::uint32_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

FaceTable::FaceTable(const SimplicialComplex & complex, const Limits & limits)
    : vertices_(complex.ground().to_vector())
{
    const std::size_t n = vertices_.size();
    limits.check(n, "face enumeration over the ground set");
    if (n > hard_width_limit)
        throw BudgetError("face enumeration over the ground set", n, hard_width_limit);

    full_ = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
    flags_.assign(std::size_t{1} << n, 0);
    for (const Face & f : complex.facets())
        flags_[compress(f)] = 1;
    for (std::size_t bit = 0; bit < n; ++bit) {
        const Mask b = Mask{1} << bit;
        for (Mask m = 0; m <= full_; ++m) {
            if (m & b)
                flags_[m ^ b] |= flags_[m];
            if (m == full_)
                break;
        }
    }
}

Mask FaceTable::compress(const VertexSet & s) const
{
    Mask m = 0;
    std::size_t seen = 0;
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (s.contains(vertices_[i])) {
            m |= Mask{1} << i;
            ++seen;
        }
    if (seen != s.size())
        throw DomainError("vertex set is not contained in the ground set");
    return m;
}

VertexSet FaceTable::expand(Mask m) const
{
    VertexSet s;
    for (; m != 0; m &= m - 1)
        s.insert(vertices_[static_cast<std::size_t>(std::countr_zero(m))]);
    return s;
}

void Scratch::prepare(std::size_t width)
{
    const std::size_t size = std::size_t{1} << width;
    if (slot.size() != size)
        slot.assign(size, -1);
}

std::size_t dim_in_link(const FaceTable & table, Mask a, Mask b, Scratch & scratch)
{
    scratch.prepare(table.width());
    const Mask rest = table.full() & ~a & ~b;

    // N_B of the link: F avoiding A ∪ B with F ∪ A a face and F ∪ A ∪ B not.
    auto & members = scratch.members;
    members.clear();
    for (Mask s = rest;; s = (s - 1) & rest) {
        if (table.face(s | a) && !table.face(s | a | b)) {
            scratch.slot[s] = static_cast<std::int32_t>(members.size());
            members.push_back(s);
        }
        if (s == 0)
            break;
    }
    if (members.empty())
        return 0;

    // N_B is closed upward inside the faces avoiding B, so covering pairs
    // F ⊂ F + v already connect every comparable pair.
    auto & parent = scratch.parent;
    parent.resize(members.size());
    std::iota(parent.begin(), parent.end(), 0u);
    for (std::uint32_t i = 0; i < members.size(); ++i) {
        const Mask s = members[i];
        for (Mask free = rest & ~s; free != 0; free &= free - 1) {
            const std::int32_t j = scratch.slot[s | (free & (~free + 1))];
            if (j >= 0) {
                const std::uint32_t ri = find_root(parent, i);
                const std::uint32_t rj = find_root(parent, static_cast<std::uint32_t>(j));
                if (ri != rj)
                    parent[std::max(ri, rj)] = std::min(ri, rj);
            }
        }
    }

    std::size_t result = 0;
    if (std::popcount(b) == 1) {
        std::size_t components = 0;
        for (std::uint32_t i = 0; i < members.size(); ++i)
            components += find_root(parent, i) == i;
        result = components - 1;
    } else {
        // Ñ_B: some proper B' ⊂ B already gives a non-face; nonfaces are
        // closed upward, so the maximal proper subsets B - β suffice.
        auto & tainted = scratch.tainted;
        tainted.assign(members.size(), 0);
        for (std::uint32_t i = 0; i < members.size(); ++i) {
            const Mask s = members[i] | a;
            for (Mask rem = b; rem != 0; rem &= rem - 1) {
                const Mask beta = rem & (~rem + 1);
                if (!table.face(s | (b ^ beta))) {
                    tainted[find_root(parent, i)] = 1;
                    break;
                }
            }
        }
        for (std::uint32_t i = 0; i < members.size(); ++i)
            result += find_root(parent, i) == i && !tainted[i];
    }

    for (Mask s : members)
        scratch.slot[s] = -1;
    return result;
}

} // namespace t1rigid::detail
