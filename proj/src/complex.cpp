#include "t1rigid/complex.hpp"

#include <algorithm>
#include <unordered_set>

#include "t1rigid/errors.hpp"
#include "t1rigid/ideal.hpp"

namespace t1rigid {

SimplicialComplex SimplicialComplex::from_facets(VertexSet ground, std::vector<Face> faces)
{
    if (faces.empty())
        throw InputError("a simplicial complex needs at least one face (the void complex is not allowed)");
    for (const Face & f : faces)
        if (!f.is_subset_of(ground))
            throw InputError("face is not contained in the ground set");
    return SimplicialComplex(std::move(ground), maximal_elements(std::move(faces)));
}

bool SimplicialComplex::is_face(const Face & f) const
{
    return std::any_of(facets_.begin(), facets_.end(), [&](const Face & g) { return f.is_subset_of(g); });
}

VertexSet SimplicialComplex::zero_faces() const
{
    VertexSet out;
    for (const Face & g : facets_)
        out |= g;
    return out;
}

SimplicialComplex full_simplex(const VertexSet & ground)
{
    return SimplicialComplex::from_facets(ground, {ground});
}

SimplicialComplex simplex_boundary(const VertexSet & ground)
{
    if (ground.empty())
        throw DomainError("the boundary of the empty simplex is void");
    std::vector<Face> facets;
    ground.for_each([&](Vertex v) {
        Face f = ground;
        f.erase(v);
        facets.push_back(std::move(f));
    });
    return SimplicialComplex::from_facets(ground, std::move(facets));
}

namespace {

std::vector<Face> faces_avoiding(const SimplicialComplex & complex, const VertexSet & removed)
{
    std::unordered_set<Face, VertexSetHash> seen;
    for (const Face & g : complex.facets())
        for_each_subset(g - removed, [&](const Face & f) { seen.insert(f); });
    std::vector<Face> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), GradedLess{});
    return out;
}

void require_disjoint(const SimplicialComplex & first, const SimplicialComplex & second, const char * op)
{
    if (first.ground().intersects(second.ground()))
        throw DomainError(std::string(op) + " needs complexes on disjoint ground sets");
}

} // namespace

std::vector<Face> all_faces(const SimplicialComplex & complex)
{
    return faces_avoiding(complex, {});
}

std::vector<Face> restriction(const SimplicialComplex & complex, const VertexSet & removed)
{
    return faces_avoiding(complex, removed);
}

SimplicialComplex link(const SimplicialComplex & complex, const Face & a)
{
    if (!complex.is_face(a))
        throw DomainError("link is only defined at a face");
    std::vector<Face> facets;
    for (const Face & g : complex.facets())
        if (a.is_subset_of(g))
            facets.push_back(g - a);
    return SimplicialComplex::from_facets(complex.ground() - a, std::move(facets));
}

SimplicialComplex join(const SimplicialComplex & first, const SimplicialComplex & second)
{
    require_disjoint(first, second, "join");
    std::vector<Face> facets;
    facets.reserve(first.facets().size() * second.facets().size());
    for (const Face & f : first.facets())
        for (const Face & g : second.facets())
            facets.push_back(f | g);
    return SimplicialComplex::from_facets(first.ground() | second.ground(), std::move(facets));
}

SimplicialComplex disjoint_union(const SimplicialComplex & first, const SimplicialComplex & second)
{
    require_disjoint(first, second, "disjoint union");
    std::vector<Face> facets = first.facets();
    facets.insert(facets.end(), second.facets().begin(), second.facets().end());
    return SimplicialComplex::from_facets(first.ground() | second.ground(), std::move(facets));
}

SimplicialComplex circ(const SimplicialComplex & first, const SimplicialComplex & second)
{
    require_disjoint(first, second, "circ");
    std::vector<Face> facets;
    for (const Face & f : first.facets())
        facets.push_back(f | second.ground());
    for (const Face & g : second.facets())
        facets.push_back(first.ground() | g);
    return SimplicialComplex::from_facets(first.ground() | second.ground(), std::move(facets));
}

bool is_special(const SimplicialComplex & complex)
{
    const auto gens = nonfaces_minimal(complex).generators();
    if (gens.empty())
        return false;
    if (gens.size() == 1)
        return gens.front().size() <= 2;
    VertexSet common = gens.front();
    for (const Face & g : gens) {
        if (g.size() != 2)
            return false;
        common &= g;
    }
    return common.size() == 1;
}

} // namespace t1rigid
