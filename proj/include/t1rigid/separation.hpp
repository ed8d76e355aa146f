#ifndef T1RIGID_SEPARATION_HPP
#define T1RIGID_SEPARATION_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "t1rigid/complex.hpp"
#include "t1rigid/errors.hpp"

namespace t1rigid {

/// Vertices i ∈ [Δ] with k = dim T¹(Δ)_{-e_i} > 0, ascending.
std::vector<std::pair<Vertex, std::size_t>> separable_vertices(const SimplicialComplex & complex,
                                                               const Limits & limits = {});

struct SeparationResult
{
    SimplicialComplex separated;
    Vertex split_vertex = 0;
    /// v_0, …, v_k: fresh identifiers above every ground vertex of the input.
    std::vector<Vertex> new_vertices;
    /// A_0, …, A_k, the components of G_{i}(Δ), ordered by their first face in
    /// graded order. Empty when N_{i}(Δ) is empty.
    std::vector<std::vector<Face>> components;

    std::size_t k() const { return new_vertices.size() - 1; }
};

/**
 * The k-separation of Δ at i:
 *   Δ̃ = Ω ∗ link_Δ{i} ∪ ⋃_ℓ Ω_ℓ ∗ A_ℓ,
 * with Ω the simplex on the new vertices and Ω_ℓ its facet missing v_ℓ.
 * Throws DomainError unless i ∈ [Δ].
 */
SeparationResult k_separate(const SimplicialComplex & complex, Vertex i, const Limits & limits = {});

struct SeparationCheck
{
    bool collapses = false;           // v_ℓ ↦ i turns I_Δ̃ into I_Δ and rebuilds Δ
    bool same_generator_count = false;
    bool every_new_vertex_used = false; // each v_ℓ divides a generator (vacuous for k = 0)
    bool new_degrees_vanish = false;  // T¹(Δ̃)_{-b} = 0 for ∅ ≠ B ⊆ {v_0, …, v_k}

    bool passed() const { return collapses && same_generator_count && every_new_vertex_used && new_degrees_vanish; }
};

SeparationCheck verify_separation(const SeparationResult & result, const SimplicialComplex & original,
                                  const Limits & limits = {});

struct SeparationStep
{
    Vertex split_vertex = 0;
    std::vector<Vertex> new_vertices;
};

struct FixpointReport
{
    SimplicialComplex complex;
    std::vector<SeparationStep> steps;
    bool converged = false;

    std::size_t rounds() const { return steps.size(); }
};

/// Separates at the smallest separable vertex until the complex is
/// inseparable or max_rounds separations have been made.
FixpointReport separate_to_fixpoint(const SimplicialComplex & complex, std::size_t max_rounds,
                                    const Limits & limits = {});

} // namespace t1rigid

#endif
