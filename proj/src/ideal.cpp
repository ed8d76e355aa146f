#include "t1rigid/ideal.hpp"

#include "t1rigid/errors.hpp"

namespace t1rigid {

SquarefreeIdeal SquarefreeIdeal::from_generators(VertexSet ground, std::vector<Face> generators)
{
    for (const Face & g : generators) {
        if (g.empty())
            throw InputError("the unit ideal (an empty generator) is not a Stanley-Reisner ideal");
        if (!g.is_subset_of(ground))
            throw InputError("generator is not contained in the ground set");
    }
    return SquarefreeIdeal(std::move(ground), minimal_elements(std::move(generators)));
}

std::vector<Face> minimal_transversals(const std::vector<Face> & family)
{
    std::vector<Face> current{Face{}};
    for (const Face & edge : family) {
        std::vector<Face> next;
        for (const Face & t : current) {
            if (t.intersects(edge)) {
                next.push_back(t);
                continue;
            }
            edge.for_each([&](Vertex v) {
                Face grown = t;
                grown.insert(v);
                next.push_back(std::move(grown));
            });
        }
        current = minimal_elements(std::move(next));
        if (current.empty())
            break;
    }
    return current;
}

SquarefreeIdeal nonfaces_minimal(const SimplicialComplex & complex)
{
    // N is a non-face iff it meets the complement of every facet.
    std::vector<Face> complements;
    complements.reserve(complex.facets().size());
    for (const Face & g : complex.facets())
        complements.push_back(complex.ground() - g);
    return SquarefreeIdeal::from_generators(complex.ground(), minimal_transversals(complements));
}

SimplicialComplex from_nonfaces(const SquarefreeIdeal & ideal)
{
    // F contains no generator iff its complement meets every generator.
    std::vector<Face> facets;
    for (const Face & t : minimal_transversals(ideal.generators()))
        facets.push_back(ideal.ground() - t);
    return SimplicialComplex::from_facets(ideal.ground(), std::move(facets));
}

SquarefreeIdeal product(const SquarefreeIdeal & first, const SquarefreeIdeal & second)
{
    if (first.ground().intersects(second.ground()))
        throw DomainError("ideal product is only formed over disjoint variable sets");
    std::vector<Face> gens;
    for (const Face & f : first.generators())
        for (const Face & g : second.generators())
            gens.push_back(f | g);
    return SquarefreeIdeal::from_generators(first.ground() | second.ground(), std::move(gens));
}

} // namespace t1rigid
