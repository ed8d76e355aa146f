#ifndef T1RIGID_DETAIL_FACE_TABLE_HPP
#define T1RIGID_DETAIL_FACE_TABLE_HPP

#include <cstdint>
#include <vector>

#include "t1rigid/complex.hpp"
#include "t1rigid/errors.hpp"

namespace t1rigid::detail {

using Mask = std::uint32_t;

/**
 * Face membership for every subset of the ground set, indexed by the
 * subset's bitmask over the ground vertices renumbered 0..n-1 in ascending
 * order. Renumbering preserves order, so mask order and VertexSet order agree.
 */
class FaceTable
{
public:
    FaceTable(const SimplicialComplex & complex, const Limits & limits);

    std::size_t width() const { return vertices_.size(); }
    Mask full() const { return full_; }
    bool face(Mask m) const { return flags_[m] != 0; }

    Mask compress(const VertexSet & s) const;
    VertexSet expand(Mask m) const;

private:
    std::vector<Vertex> vertices_;
    std::vector<std::uint8_t> flags_;
    Mask full_ = 0;
};

/// Reusable per-thread buffers for the component counts.
struct Scratch
{
    std::vector<std::int32_t> slot;    // mask -> index into members, or -1
    std::vector<Mask> members;
    std::vector<std::uint32_t> parent;
    std::vector<std::uint8_t> tainted;

    void prepare(std::size_t width);
};

/**
 * dim T¹(link_Δ A)_{-b} for A a face, B ⊆ [link_Δ A] \ ∅ or any nonempty B
 * disjoint from A. Works directly on the table: the faces of the link are
 * the F avoiding A with F ∪ A a face.
 */
std::size_t dim_in_link(const FaceTable & table, Mask a, Mask b, Scratch & scratch);

} // namespace t1rigid::detail

#endif
