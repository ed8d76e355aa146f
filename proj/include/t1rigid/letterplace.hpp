#ifndef T1RIGID_LETTERPLACE_HPP
#define T1RIGID_LETTERPLACE_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "t1rigid/graph.hpp"
#include "t1rigid/ideal.hpp"

namespace t1rigid {

/**
 * A finite poset on elements 0..n-1, each with a display label. Built from
 * relations a < b; the order is their reflexive-transitive closure. Cycles
 * are rejected with InputError.
 */
class Poset
{
public:
    Poset(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>> & less);

    /// The chain 1 < 2 < … < n.
    static Poset chain(std::size_t n);
    static Poset antichain(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    const std::vector<std::string> & labels() const { return labels_; }
    bool leq(std::size_t a, std::size_t b) const { return order_[a * size() + b] != 0; }

    /// Elements in an order compatible with ≤.
    const std::vector<std::size_t> & linear_extension() const { return extension_; }

private:
    std::vector<std::string> labels_;
    std::vector<unsigned char> order_;
    std::vector<std::size_t> extension_;
};

/// φ: P → Q given by values[p] = φ(p).
struct IsotoneMap
{
    std::vector<std::size_t> values;

    friend bool operator==(const IsotoneMap &, const IsotoneMap &) = default;
    friend auto operator<=>(const IsotoneMap &, const IsotoneMap &) = default;
};

/// Hom(P, Q), sorted lexicographically by value vector. DomainError if either is empty.
std::vector<IsotoneMap> isotone_maps(const Poset & p, const Poset & q);

/// Identifier of the variable x_{p,q} in L(P, Q).
inline Vertex letterplace_variable(std::size_t p, std::size_t q, std::size_t q_size)
{
    return static_cast<Vertex>(p * q_size + q);
}

/// Labels "p:q" indexed by letterplace_variable.
std::vector<std::string> letterplace_labels(const Poset & p, const Poset & q);

/// L(P, Q) = (u_φ : φ ∈ Hom(P, Q)) with u_φ = ∏ x_{p,φ(p)}.
SquarefreeIdeal letterplace_ideal(const Poset & p, const Poset & q);

bool is_antichain(const Poset & p);

/// L(P, Q) is rigid exactly when P is an antichain, except that a one-element
/// Q with |P| ≥ 2 gives a single monomial of degree ≥ 2, never rigid.
bool letterplace_is_rigid(const Poset & p, const Poset & q);

/// Vertices p_i = i and q_j = |P| + j; edges {p_i, q_j} for p_i ≤ p_j.
Graph cm_bipartite_graph(const Poset & p);

/// Labels "p<label>" and "q<label>" for cm_bipartite_graph.
std::vector<std::string> cm_bipartite_labels(const Poset & p);

} // namespace t1rigid

#endif
