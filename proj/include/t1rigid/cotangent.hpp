#ifndef T1RIGID_COTANGENT_HPP
#define T1RIGID_COTANGENT_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "t1rigid/complex.hpp"
#include "t1rigid/errors.hpp"

namespace t1rigid {

/**
 * The multidegree a − b of T¹, recorded by A = supp a and B = supp b.
 * Only b ∈ {0,1}ⁿ carries nonzero pieces and the piece depends on the
 * supports alone, so the pair (A, B) is the whole degree.
 */
struct MultiDegree
{
    VertexSet a;
    VertexSet b;

    friend bool operator==(const MultiDegree &, const MultiDegree &) = default;
};

/// A graded, then B graded. The order of T1Table entries.
bool degree_less(const MultiDegree & x, const MultiDegree & y);

/// N_B(Δ), Ñ_B(Δ) and M_B(Δ), each sorted with graded_less.
struct DegreeWitnessSets
{
    std::vector<Face> n_b;
    std::vector<Face> n_b_tilde;
    std::vector<Face> m_b;
};

DegreeWitnessSets witness_sets(const SimplicialComplex & complex, const VertexSet & b,
                               const Limits & limits = {});

/// G_B(Δ): nodes are N_B(Δ), edges join strictly comparable nodes (indices, first < second).
struct ComparabilityGraph
{
    std::vector<Face> nodes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    /// Component index per node; components are numbered by their first node.
    std::vector<std::size_t> component_labels() const;
    std::size_t component_count() const;
};

ComparabilityGraph comparability_graph(const SimplicialComplex & complex, const VertexSet & b,
                                       const Limits & limits = {});

/**
 * dim T¹(Δ)_{-b} with B = supp b nonempty. For |B| ≥ 2 this counts the
 * components of G_B(Δ) free of Ñ_B(Δ); for |B| = 1 it is the number of
 * components minus one, and 0 when N_B(Δ) is empty. Throws DomainError on B = ∅.
 */
std::size_t t1_dim_neg(const SimplicialComplex & complex, const VertexSet & b, const Limits & limits = {});

/// dim T¹(Δ)_{a-b}: zero unless A ∈ Δ and ∅ ≠ B ⊆ [link_Δ A], else t1_dim_neg(link_Δ A, B).
std::size_t t1_dim(const SimplicialComplex & complex, const MultiDegree & degree, const Limits & limits = {});

struct T1Entry
{
    MultiDegree degree;
    std::size_t dim = 0;

    friend bool operator==(const T1Entry &, const T1Entry &) = default;
};

/// Every nonzero graded piece of T¹(Δ), in degree_less order.
class T1Table
{
public:
    T1Table(SimplicialComplex ambient, std::vector<T1Entry> entries)
        : ambient_(std::move(ambient)), entries_(std::move(entries))
    {
    }

    const SimplicialComplex & ambient() const { return ambient_; }
    const std::vector<T1Entry> & entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    /// Zero for degrees not stored.
    std::size_t dim(const MultiDegree & degree) const;

private:
    SimplicialComplex ambient_;
    std::vector<T1Entry> entries_;
};

struct TableOptions
{
    /// Worker threads over the face A; the result does not depend on this.
    unsigned workers = 1;
    Limits limits;
};

T1Table t1_table(const SimplicialComplex & complex, const TableOptions & options = {});

/// The first nonzero entry t1_table would list, without building the table.
std::optional<T1Entry> first_nonzero_degree(const SimplicialComplex & complex, const Limits & limits = {});

/// T¹(Δ)_{-b} = 0 for every nonempty B ⊆ [Δ].
bool is_empty_rigid(const SimplicialComplex & complex, const Limits & limits = {});

/// T¹(Δ) = 0, i.e. every link is ∅-rigid.
bool is_rigid(const SimplicialComplex & complex, const Limits & limits = {});

/// T¹(Δ)_{-e_i} = 0 for every i ∈ [Δ].
bool is_inseparable(const SimplicialComplex & complex, const Limits & limits = {});

} // namespace t1rigid

#endif
