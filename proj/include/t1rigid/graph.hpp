#ifndef T1RIGID_GRAPH_HPP
#define T1RIGID_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "t1rigid/complex.hpp"
#include "t1rigid/errors.hpp"

namespace t1rigid {

/// An edge {u, v} stored with u < v.
using Edge = std::pair<Vertex, Vertex>;

Edge make_edge(Vertex u, Vertex v);

/// A finite simple graph. Duplicate edges collapse; loops are rejected.
class Graph
{
public:
    Graph() = default;
    Graph(VertexSet vertices, const std::vector<Edge> & edges);

    const VertexSet & vertices() const { return vertices_; }
    /// Sorted.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;

    const VertexSet & neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return neighbors(u).contains(v); }
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }

    /// G_S, the subgraph induced on S ∩ V(G).
    Graph induced(const VertexSet & keep) const;
    /// G ∖ S.
    Graph without(const VertexSet & removed) const { return induced(vertices_ - removed); }

    friend bool operator==(const Graph &, const Graph &) = default;

private:
    VertexSet vertices_;
    std::vector<VertexSet> adjacency_; // indexed by vertex id
};

Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph complete_graph(std::size_t n);

std::size_t component_count(const Graph & g);
/// The empty graph counts as connected.
bool is_connected(const Graph & g);

/// Δ(G): the independent sets. Its minimal non-faces are the edges.
SimplicialComplex independence_complex(const Graph & g);

/// N[A] = A ∪ N(A).
VertexSet closed_neighborhood(const Graph & g, const VertexSet & a);

/// G^(i): the complement of G restricted to N(i).
Graph local_complement(const Graph & g, Vertex i);

/// G^(i) connected for every vertex i.
bool graph_is_inseparable(const Graph & g);

struct LeafStructure
{
    VertexSet free_vertices;
    std::vector<Edge> leaves;
    std::vector<Edge> branches;
};

LeafStructure leaves_branches(const Graph & g);

/// Edges sharing no vertex with another edge.
std::vector<Edge> isolated_edges(const Graph & g);

/// Calls fn(A) for each independent set A (∅ first); stops early when fn returns false.
template <class Fn>
void for_each_independent_set(const Graph & g, Fn && fn);

struct AlphaWitness
{
    VertexSet a;
    Vertex i = 0;
};

struct BetaWitness
{
    VertexSet a;
    Edge edge;
};

/// (α): (G ∖ N[A])^(i) connected for every independent A and i ∉ N[A].
/// Returns the first failure, or nothing when (α) holds.
std::optional<AlphaWitness> condition_alpha(const Graph & g, const Limits & limits = {});

/// (β): G ∖ N[A] has no isolated edge for every independent A.
std::optional<BetaWitness> condition_beta(const Graph & g, const Limits & limits = {});

/// (α) ∧ (β).
bool graph_is_rigid(const Graph & g, const Limits & limits = {});

/// Some vertex subset of size `length` ≥ 3 induces a cycle.
bool has_induced_cycle(const Graph & g, std::size_t length);

bool is_chordal(const Graph & g);

enum class StructuralVerdict { rigid, not_rigid, criterion_inapplicable };

/**
 * Without induced 4-, 5- or 6-cycles, G is rigid iff every edge is a branch
 * and every vertex of a 3-cycle lies on a leaf.
 */
StructuralVerdict classify_rigid_structural(const Graph & g);

/// O_G(e) for e = {i, j}: vertices adjacent to N_0(e) = (N(i) ∪ N(j)) ∖ e but to neither i nor j.
VertexSet branch_set_O(const Graph & g, const Edge & e);

// implementation

template <class Fn>
void for_each_independent_set(const Graph & g, Fn && fn)
{
    const std::vector<Vertex> order = g.vertices().to_vector();
    VertexSet current;
    bool stop = false;
    // Each set is reached once: vertices are added in ascending order, and
    // `blocked` holds the neighbors of what is already chosen.
    auto rec = [&](auto && self, std::size_t from, const VertexSet & blocked) -> void {
        if (!fn(static_cast<const VertexSet &>(current))) {
            stop = true;
            return;
        }
        for (std::size_t k = from; k < order.size() && !stop; ++k) {
            const Vertex v = order[k];
            if (blocked.contains(v))
                continue;
            current.insert(v);
            self(self, k + 1, blocked | g.neighbors(v));
            current.erase(v);
        }
    };
    rec(rec, 0, VertexSet{});
}

} // namespace t1rigid

#endif
