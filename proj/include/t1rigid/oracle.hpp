#ifndef T1RIGID_ORACLE_HPP
#define T1RIGID_ORACLE_HPP

#include <cstddef>

#include "t1rigid/complex.hpp"
#include "t1rigid/exact_rank.hpp"

namespace t1rigid {

enum class OracleArithmetic {
    /// Ranks over two word-size prime fields; falls back to rationals if they disagree.
    modular,
    /// Ranks over the rationals only.
    rational,
};

/**
 * The linear map (d, r): K⁰(N_B) → K¹(N_B) ⊕ K⁰(Ñ_B) as a matrix.
 *
 * Columns are N_B(Δ) in graded order. One row per pair Y0 before Y1
 * of N_B with Y0 ∪ Y1 ∈ N_B, carrying λ(Y1) − λ(Y0), then one unit row per
 * member of Ñ_B (the restriction). N_B and Ñ_B are recomputed here from
 * their definitions with is_face, independently of the cotangent module.
 */
template <class Scalar>
DenseMatrix<Scalar> oracle_matrix(const SimplicialComplex & complex, const VertexSet & b);

/// dim of the kernel of (d, r), minus one when |B| = 1 (never below zero).
std::size_t t1_dim_oracle(const SimplicialComplex & complex, const VertexSet & b,
                          OracleArithmetic arithmetic = OracleArithmetic::modular);

} // namespace t1rigid

#endif
