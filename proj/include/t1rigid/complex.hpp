#ifndef T1RIGID_COMPLEX_HPP
#define T1RIGID_COMPLEX_HPP

#include <vector>

#include "t1rigid/vertex_set.hpp"

namespace t1rigid {

/**
 * A simplicial complex given by its ground set and its facets.
 *
 * The ground set may be strictly larger than the union of the facets;
 * the extra vertices are "ghost" vertices, present in the polynomial ring
 * but not as 0-faces. The empty face always belongs to the complex, so the
 * smallest complex is {∅}. There is no void complex.
 *
 * Facets are pairwise incomparable and kept in lex_less order, so two
 * complexes are equal exactly when ground sets and facet lists are.
 */
class SimplicialComplex
{
public:
    /// The smallest complex containing every input face. Throws InputError on
    /// an empty face list or a face outside the ground set.
    static SimplicialComplex from_facets(VertexSet ground, std::vector<Face> faces);

    const VertexSet & ground() const { return ground_; }
    const std::vector<Face> & facets() const { return facets_; }

    bool is_face(const Face & f) const;

    /// Vertices v with {v} a face, written [Δ].
    VertexSet zero_faces() const;

    /// Ghost vertices: ground minus zero_faces().
    VertexSet ghost_vertices() const { return ground_ - zero_faces(); }

    /// Exactly one facet, equal to the ground set.
    bool is_full_simplex() const { return facets_.size() == 1 && facets_.front() == ground_; }

    friend bool operator==(const SimplicialComplex &, const SimplicialComplex &) = default;

private:
    SimplicialComplex(VertexSet ground, std::vector<Face> facets)
        : ground_(std::move(ground)), facets_(std::move(facets))
    {
    }

    VertexSet ground_;
    std::vector<Face> facets_;
};

/// 2^V.
SimplicialComplex full_simplex(const VertexSet & ground);

/// 2^V minus V itself. Requires a nonempty ground set.
SimplicialComplex simplex_boundary(const VertexSet & ground);

/// Every face, sorted with graded_less.
std::vector<Face> all_faces(const SimplicialComplex & complex);

/// link_Δ A on the ground set ground(Δ) \ A. Throws DomainError if A is not a face.
SimplicialComplex link(const SimplicialComplex & complex, const Face & a);

/// Δ1 ∗ Δ2. Ground sets must be disjoint (DomainError otherwise).
SimplicialComplex join(const SimplicialComplex & first, const SimplicialComplex & second);

/// Δ1 ∪ Δ2 on disjoint ground sets.
SimplicialComplex disjoint_union(const SimplicialComplex & first, const SimplicialComplex & second);

/// Δ1 ∘ Δ2 = (Δ1 ∗ 2^V2) ∪ (2^V1 ∗ Δ2); its Stanley–Reisner ideal is the
/// product of the two ideals.
SimplicialComplex circ(const SimplicialComplex & first, const SimplicialComplex & second);

/// Faces disjoint from `removed`, sorted with graded_less.
std::vector<Face> restriction(const SimplicialComplex & complex, const VertexSet & removed);

/**
 * The minimal non-faces have the form z·P: either the single generator {z},
 * or generators {z,w} for w ranging over a nonempty W not containing z.
 */
bool is_special(const SimplicialComplex & complex);

/// Calls fn(face) for every subset of `set`, including ∅ and `set`.
template <class Fn>
void for_each_subset(const VertexSet & set, Fn && fn)
{
    if (set.fits_word()) {
        const std::uint64_t full = set.low_word();
        std::uint64_t s = full;
        while (true) {
            fn(VertexSet::from_word(s));
            if (s == 0)
                break;
            s = (s - 1) & full;
        }
        return;
    }
    const std::vector<Vertex> members = set.to_vector();
    const std::size_t n = members.size();
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        VertexSet s;
        for (std::size_t k = 0; k < n; ++k)
            if ((bits >> k) & 1u)
                s.insert(members[k]);
        fn(s);
    }
}

} // namespace t1rigid

#endif
