#ifndef T1RIGID_IDEAL_HPP
#define T1RIGID_IDEAL_HPP

#include <vector>

#include "t1rigid/complex.hpp"

namespace t1rigid {

/**
 * A squarefree monomial ideal, recorded by the supports of its minimal
 * generators. An empty generator list is the zero ideal; an empty generator
 * (the unit ideal) is rejected.
 */
class SquarefreeIdeal
{
public:
    /// Minimalizes the input. Throws InputError on an empty generator or one
    /// outside the ground set.
    static SquarefreeIdeal from_generators(VertexSet ground, std::vector<Face> generators);

    const VertexSet & ground() const { return ground_; }
    const std::vector<Face> & generators() const { return generators_; }
    bool is_zero() const { return generators_.empty(); }

    friend bool operator==(const SquarefreeIdeal &, const SquarefreeIdeal &) = default;

private:
    SquarefreeIdeal(VertexSet ground, std::vector<Face> generators)
        : ground_(std::move(ground)), generators_(std::move(generators))
    {
    }

    VertexSet ground_;
    std::vector<Face> generators_;
};

/// The Stanley–Reisner ideal I_Δ: minimal non-faces of Δ.
SquarefreeIdeal nonfaces_minimal(const SimplicialComplex & complex);

/// The unique complex Δ on the ideal's ground set with I_Δ = I.
SimplicialComplex from_nonfaces(const SquarefreeIdeal & ideal);

/// Minimalized pairwise unions; the product of the two ideals. Grounds must be disjoint.
SquarefreeIdeal product(const SquarefreeIdeal & first, const SquarefreeIdeal & second);

/**
 * Minimal transversals of a family of sets (Berge's algorithm): the
 * inclusion-minimal sets meeting every member. An empty family yields {∅};
 * a family containing ∅ yields no transversal at all.
 */
std::vector<Face> minimal_transversals(const std::vector<Face> & family);

} // namespace t1rigid

#endif
