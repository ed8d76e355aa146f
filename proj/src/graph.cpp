#include "t1rigid/graph.hpp"

#include <algorithm>

#include "t1rigid/ideal.hpp"

namespace t1rigid {

namespace {

const VertexSet no_neighbors;

} // namespace

Edge make_edge(Vertex u, Vertex v)
{
    if (u == v)
        throw InputError("a simple graph has no loops");
    return u < v ? Edge{u, v} : Edge{v, u};
}

Graph::Graph(VertexSet vertices, const std::vector<Edge> & edges)
    : vertices_(std::move(vertices))
{
    if (const auto top = vertices_.max())
        adjacency_.resize(*top + 1);
    for (const auto & [u, v] : edges) {
        if (u == v)
            throw InputError("a simple graph has no loops");
        if (!vertices_.contains(u) || !vertices_.contains(v))
            throw InputError("edge endpoint is not a vertex of the graph");
        adjacency_[u].insert(v);
        adjacency_[v].insert(u);
    }
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    vertices_.for_each([&](Vertex u) {
        adjacency_[u].for_each([&](Vertex v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    });
    return out;
}

std::size_t Graph::edge_count() const
{
    std::size_t twice = 0;
    vertices_.for_each([&](Vertex u) { twice += adjacency_[u].size(); });
    return twice / 2;
}

const VertexSet & Graph::neighbors(Vertex v) const
{
    return vertices_.contains(v) ? adjacency_[v] : no_neighbors;
}

Graph Graph::induced(const VertexSet & keep) const
{
    Graph h;
    h.vertices_ = vertices_ & keep;
    h.adjacency_.resize(adjacency_.size());
    h.vertices_.for_each([&](Vertex v) { h.adjacency_[v] = adjacency_[v] & h.vertices_; });
    return h;
}

Graph cycle_graph(std::size_t n)
{
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= n; ++v)
        edges.push_back(make_edge(v, v % n + 1));
    VertexSet vs;
    for (Vertex v = 1; v <= n; ++v)
        vs.insert(v);
    return Graph(vs, edges);
}

Graph path_graph(std::size_t n)
{
    std::vector<Edge> edges;
    VertexSet vs;
    for (Vertex v = 1; v <= n; ++v) {
        vs.insert(v);
        if (v > 1)
            edges.emplace_back(v - 1, v);
    }
    return Graph(vs, edges);
}

Graph complete_graph(std::size_t n)
{
    std::vector<Edge> edges;
    VertexSet vs;
    for (Vertex v = 1; v <= n; ++v) {
        vs.insert(v);
        for (Vertex u = 1; u < v; ++u)
            edges.emplace_back(u, v);
    }
    return Graph(vs, edges);
}

std::size_t component_count(const Graph & g)
{
    VertexSet unseen = g.vertices();
    std::size_t count = 0;
    while (!unseen.empty()) {
        ++count;
        VertexSet frontier{*unseen.min()};
        unseen -= frontier;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](Vertex v) { next |= g.neighbors(v) & unseen; });
            unseen -= next;
            frontier = std::move(next);
        }
    }
    return count;
}

bool is_connected(const Graph & g)
{
    return component_count(g) <= 1;
}

SimplicialComplex independence_complex(const Graph & g)
{
    std::vector<Face> gens;
    for (const auto & [u, v] : g.edges())
        gens.push_back(VertexSet{u, v});
    return from_nonfaces(SquarefreeIdeal::from_generators(g.vertices(), std::move(gens)));
}

VertexSet closed_neighborhood(const Graph & g, const VertexSet & a)
{
    VertexSet out = a;
    a.for_each([&](Vertex v) { out |= g.neighbors(v); });
    return out;
}

Graph local_complement(const Graph & g, Vertex i)
{
    if (!g.vertices().contains(i))
        throw DomainError("local complement at a vertex outside the graph");
    const VertexSet & nbhd = g.neighbors(i);
    std::vector<Edge> edges;
    nbhd.for_each([&](Vertex u) {
        nbhd.for_each([&](Vertex v) {
            if (u < v && !g.adjacent(u, v))
                edges.emplace_back(u, v);
        });
    });
    return Graph(nbhd, edges);
}

bool graph_is_inseparable(const Graph & g)
{
    bool ok = true;
    g.vertices().for_each([&](Vertex i) { ok = ok && is_connected(local_complement(g, i)); });
    return ok;
}

LeafStructure leaves_branches(const Graph & g)
{
    LeafStructure out;
    g.vertices().for_each([&](Vertex v) {
        if (g.degree(v) == 1)
            out.free_vertices.insert(v);
    });
    const auto edges = g.edges();
    for (const Edge & e : edges)
        if (out.free_vertices.contains(e.first) || out.free_vertices.contains(e.second))
            out.leaves.push_back(e);
    for (const Edge & e : edges) {
        const bool branch = std::any_of(out.leaves.begin(), out.leaves.end(), [&](const Edge & leaf) {
            return leaf != e && (leaf.first == e.first || leaf.first == e.second || leaf.second == e.first
                                 || leaf.second == e.second);
        });
        if (branch)
            out.branches.push_back(e);
    }
    return out;
}

std::vector<Edge> isolated_edges(const Graph & g)
{
    std::vector<Edge> out;
    for (const Edge & e : g.edges())
        if (g.degree(e.first) == 1 && g.degree(e.second) == 1)
            out.push_back(e);
    return out;
}

std::optional<AlphaWitness> condition_alpha(const Graph & g, const Limits & limits)
{
    limits.check(g.vertices().size(), "condition (alpha) enumerates independent sets");
    std::optional<AlphaWitness> witness;
    for_each_independent_set(g, [&](const VertexSet & a) {
        const Graph h = g.without(closed_neighborhood(g, a));
        h.vertices().for_each([&](Vertex i) {
            if (!witness && !is_connected(local_complement(h, i)))
                witness = AlphaWitness{a, i};
        });
        return !witness;
    });
    return witness;
}

std::optional<BetaWitness> condition_beta(const Graph & g, const Limits & limits)
{
    limits.check(g.vertices().size(), "condition (beta) enumerates independent sets");
    std::optional<BetaWitness> witness;
    for_each_independent_set(g, [&](const VertexSet & a) {
        const auto isolated = isolated_edges(g.without(closed_neighborhood(g, a)));
        if (!isolated.empty())
            witness = BetaWitness{a, isolated.front()};
        return !witness;
    });
    return witness;
}

bool graph_is_rigid(const Graph & g, const Limits & limits)
{
    return !condition_beta(g, limits) && !condition_alpha(g, limits);
}

bool has_induced_cycle(const Graph & g, std::size_t length)
{
    if (length < 3)
        throw DomainError("an induced cycle has at least 3 vertices");
    // Chordless paths s = p_0, p_1, … with every p_k > s; the cycle closes
    // when the last vertex is adjacent to s.
    std::vector<Vertex> path;
    auto extend = [&](auto && self) -> bool {
        const Vertex s = path.front();
        const Vertex last = path.back();
        bool found = false;
        g.neighbors(last).for_each([&](Vertex v) {
            if (found || v <= s)
                return;
            for (std::size_t k = 1; k + 1 < path.size(); ++k)
                if (path[k] == v || g.adjacent(path[k], v))
                    return;
            const bool closes = path.size() > 1 && g.adjacent(s, v);
            if (path.size() + 1 == length) {
                found = closes;
                return;
            }
            if (closes)
                return;
            path.push_back(v);
            found = self(self);
            path.pop_back();
        });
        return found;
    };
    bool found = false;
    g.vertices().for_each([&](Vertex s) {
        if (found)
            return;
        path.assign(1, s);
        found = extend(extend);
    });
    return found;
}

bool is_chordal(const Graph & g)
{
    // Maximum cardinality search; its reverse is a perfect elimination
    // ordering exactly when G is chordal.
    const std::vector<Vertex> vs = g.vertices().to_vector();
    if (vs.empty())
        return true;
    std::vector<std::size_t> weight(*g.vertices().max() + 1, 0);
    std::vector<std::size_t> position(weight.size(), 0);
    VertexSet numbered;
    std::vector<Vertex> order;
    for (std::size_t step = 0; step < vs.size(); ++step) {
        Vertex best = 0;
        bool have = false;
        for (Vertex v : vs)
            if (!numbered.contains(v) && (!have || weight[v] > weight[best])) {
                best = v;
                have = true;
            }
        numbered.insert(best);
        position[best] = order.size();
        order.push_back(best);
        g.neighbors(best).for_each([&](Vertex u) {
            if (!numbered.contains(u))
                ++weight[u];
        });
    }
    // In MCS order, the earlier neighbors of each vertex must form a clique.
    for (std::size_t k = 0; k < order.size(); ++k) {
        const Vertex v = order[k];
        VertexSet earlier;
        g.neighbors(v).for_each([&](Vertex u) {
            if (position[u] < k)
                earlier.insert(u);
        });
        if (earlier.empty())
            continue;
        Vertex parent = 0;
        std::size_t latest = 0;
        earlier.for_each([&](Vertex u) {
            if (position[u] >= latest) {
                latest = position[u];
                parent = u;
            }
        });
        VertexSet rest = earlier;
        rest.erase(parent);
        rest.for_each([&](Vertex u) {
            if (!g.adjacent(parent, u))
                latest = order.size();
        });
        if (latest == order.size())
            return false;
    }
    return true;
}

StructuralVerdict classify_rigid_structural(const Graph & g)
{
    for (std::size_t len : {4u, 5u, 6u})
        if (has_induced_cycle(g, len))
            return StructuralVerdict::criterion_inapplicable;

    const LeafStructure ls = leaves_branches(g);
    if (ls.branches.size() != g.edge_count())
        return StructuralVerdict::not_rigid;

    VertexSet on_leaf;
    for (const auto & [u, v] : ls.leaves) {
        on_leaf.insert(u);
        on_leaf.insert(v);
    }
    for (const auto & [u, v] : g.edges()) {
        const VertexSet common = g.neighbors(u) & g.neighbors(v);
        if (!common.empty() && (!on_leaf.contains(u) || !on_leaf.contains(v) || !common.is_subset_of(on_leaf)))
            return StructuralVerdict::not_rigid;
    }
    return StructuralVerdict::rigid;
}

VertexSet branch_set_O(const Graph & g, const Edge & e)
{
    const auto [i, j] = e;
    if (!g.adjacent(i, j))
        throw DomainError("branch_set_O needs an edge of the graph");
    const VertexSet ends{i, j};
    const VertexSet n0 = (g.neighbors(i) | g.neighbors(j)) - ends;
    VertexSet reach;
    n0.for_each([&](Vertex v) { reach |= g.neighbors(v); });
    VertexSet out;
    reach.for_each([&](Vertex w) {
        if (!g.neighbors(w).intersects(ends) && !ends.contains(w))
            out.insert(w);
    });
    return out;
}

} // namespace t1rigid
