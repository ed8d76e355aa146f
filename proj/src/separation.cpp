#include "t1rigid/separation.hpp"

#include "t1rigid/cotangent.hpp"
#include "t1rigid/ideal.hpp"

namespace t1rigid {

std::vector<std::pair<Vertex, std::size_t>> separable_vertices(const SimplicialComplex & complex,
                                                               const Limits & limits)
{
    std::vector<std::pair<Vertex, std::size_t>> out;
    complex.zero_faces().for_each([&](Vertex v) {
        if (const std::size_t k = t1_dim_neg(complex, VertexSet{v}, limits))
            out.emplace_back(v, k);
    });
    return out;
}

SeparationResult k_separate(const SimplicialComplex & complex, Vertex i, const Limits & limits)
{
    if (!complex.zero_faces().contains(i))
        throw DomainError("separation needs a vertex i with {i} a face");

    const ComparabilityGraph g = comparability_graph(complex, VertexSet{i}, limits);
    const std::size_t count = g.component_count();
    std::vector<std::vector<Face>> components(count);
    const auto labels = g.component_labels();
    for (std::size_t n = 0; n < g.nodes.size(); ++n)
        components[labels[n]].push_back(g.nodes[n]);

    const Vertex first_new = *complex.ground().max() + 1;
    std::vector<Vertex> fresh;
    VertexSet omega;
    for (std::size_t l = 0; l < std::max<std::size_t>(count, 1); ++l) {
        fresh.push_back(first_new + static_cast<Vertex>(l));
        omega.insert(fresh.back());
    }

    VertexSet ground = complex.ground();
    ground.erase(i);
    ground |= omega;

    std::vector<Face> faces;
    const SimplicialComplex lk = link(complex, VertexSet{i});
    for (const Face & f : lk.facets())
        faces.push_back(f | omega);
    for (std::size_t l = 0; l < components.size(); ++l) {
        VertexSet omega_l = omega;
        omega_l.erase(fresh[l]);
        for (const Face & f : components[l])
            faces.push_back(f | omega_l);
    }

    return {SimplicialComplex::from_facets(std::move(ground), std::move(faces)), i, std::move(fresh),
            std::move(components)};
}

SeparationCheck verify_separation(const SeparationResult & result, const SimplicialComplex & original,
                                  const Limits & limits)
{
    SeparationCheck check;
    VertexSet fresh;
    for (Vertex v : result.new_vertices)
        fresh.insert(v);

    const auto separated_gens = nonfaces_minimal(result.separated).generators();
    const auto original_ideal = nonfaces_minimal(original);

    std::vector<Face> collapsed;
    for (const Face & g : separated_gens) {
        Face c = g - fresh;
        if (g.intersects(fresh))
            c.insert(result.split_vertex);
        collapsed.push_back(c);
    }
    const auto rebuilt = SquarefreeIdeal::from_generators(original.ground(), collapsed);
    check.collapses = rebuilt == original_ideal && from_nonfaces(rebuilt) == original;
    check.same_generator_count = separated_gens.size() == original_ideal.generators().size();

    check.every_new_vertex_used = true;
    if (result.new_vertices.size() > 1)
        for (Vertex v : result.new_vertices) {
            bool used = false;
            for (const Face & g : separated_gens)
                used = used || g.contains(v);
            check.every_new_vertex_used = check.every_new_vertex_used && used;
        }

    check.new_degrees_vanish = true;
    for_each_subset(fresh, [&](const Face & b) {
        if (!b.empty() && check.new_degrees_vanish && t1_dim_neg(result.separated, b, limits) != 0)
            check.new_degrees_vanish = false;
    });
    return check;
}

FixpointReport separate_to_fixpoint(const SimplicialComplex & complex, std::size_t max_rounds, const Limits & limits)
{
    FixpointReport report{complex, {}, false};
    while (true) {
        const auto candidates = separable_vertices(report.complex, limits);
        if (candidates.empty()) {
            report.converged = true;
            return report;
        }
        if (report.steps.size() >= max_rounds)
            return report;
        SeparationResult r = k_separate(report.complex, candidates.front().first, limits);
        report.steps.push_back({r.split_vertex, r.new_vertices});
        report.complex = std::move(r.separated);
    }
}

} // namespace t1rigid
