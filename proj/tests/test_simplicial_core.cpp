#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "t1rigid/complex.hpp"
#include "t1rigid/errors.hpp"
#include "t1rigid/graph.hpp"
#include "t1rigid/ideal.hpp"

using namespace t1rigid;
using Faces = std::vector<Face>;

namespace {

SimplicialComplex cx(VertexSet ground, Faces faces)
{
    return SimplicialComplex::from_facets(std::move(ground), std::move(faces));
}

// Faces of a complex recomputed from the facet list alone.
Faces brute_faces(const SimplicialComplex & c)
{
    Faces out;
    for_each_subset(c.ground(), [&](const Face & f) {
        for (const Face & facet : c.facets())
            if (f.is_subset_of(facet)) {
                out.push_back(f);
                return;
            }
    });
    return out;
}

Faces sorted(Faces f)
{
    std::sort(f.begin(), f.end(), LexLess{});
    return f;
}

} // namespace

TEST_CASE("vertex sets beyond one machine word")
{
    VertexSet s{3, 70, 200};
    CHECK(s.size() == 3);
    CHECK(s.contains(200));
    CHECK_FALSE(s.fits_word());
    s.erase(70);
    s.erase(200);
    CHECK(s.fits_word());
    CHECK(s == VertexSet{3});
    CHECK(lex_less(VertexSet{1, 100}, VertexSet{1, 101}));
    CHECK(graded_less(VertexSet{5}, VertexSet{1, 2}));
    CHECK((VertexSet{1, 65} - VertexSet{65}) == VertexSet{1});
    CHECK(VertexSet{64, 130}.is_subset_of(VertexSet{1, 64, 130}));
    CHECK_FALSE(VertexSet{64, 131}.is_subset_of(VertexSet{1, 64, 130}));
}

TEST_CASE("from_facets keeps the maximal faces")
{
    CHECK(cx({1, 2, 3}, {{1, 2}, {2}, {1, 2}}).facets() == Faces{{1, 2}});
    CHECK(cx({1, 2, 3, 4}, {{1, 2}, {3, 4}}).facets() == Faces{{1, 2}, {3, 4}});

    const auto empty_only = cx({1, 2, 3}, {{}});
    CHECK(empty_only.facets() == Faces{{}});
    CHECK(empty_only.zero_faces().empty());
    CHECK(empty_only.ghost_vertices() == VertexSet{1, 2, 3});

    CHECK_THROWS_AS(cx({1, 2}, {}), InputError);
    CHECK_THROWS_AS(cx({1, 2}, {{1, 3}}), InputError);
}

TEST_CASE("is_face and zero_faces")
{
    CHECK(cx({1, 2}, {{1, 2}}).is_face({1}));
    CHECK_FALSE(cx({1, 2, 3}, {{1, 2}}).is_face({1, 3}));
    CHECK(cx({1, 2, 3, 4}, {{1, 2}, {3, 4}}).is_face({}));

    CHECK(cx({1, 2, 3}, {{1, 2}}).zero_faces() == VertexSet{1, 2});
    CHECK(full_simplex({1, 2, 3, 4}).zero_faces() == VertexSet{1, 2, 3, 4});
    CHECK(cx({1, 2}, {{}}).zero_faces().empty());
}

TEST_CASE("link")
{
    const auto d = cx({1, 2, 3}, {{1, 2}, {2, 3}});
    const auto lk = link(d, {2});
    CHECK(lk.ground() == VertexSet{1, 3});
    CHECK(lk.facets() == Faces{{1}, {3}});
    CHECK(link(d, {}) == d);
    CHECK_THROWS_AS(link(d, {1, 3}), DomainError);

    // Independence complex of the path 1-2-3-4 at the end vertex 4: the
    // isolated edge {1,2} with 3 left as a ghost vertex.
    const auto p4 = independence_complex(path_graph(4));
    const auto at4 = link(p4, {4});
    CHECK(at4.ground() == VertexSet{1, 2, 3});
    CHECK(at4.facets() == Faces{{1}, {2}});
    CHECK(at4.ghost_vertices() == VertexSet{3});
}

TEST_CASE("Stanley-Reisner correspondence")
{
    CHECK(nonfaces_minimal(cx({1, 2, 3}, {{1}, {2}, {3}})).generators() == Faces{{1, 2}, {1, 3}, {2, 3}});
    CHECK(nonfaces_minimal(full_simplex({1, 2, 3, 4})).is_zero());
    CHECK(nonfaces_minimal(simplex_boundary({1, 2, 3})).generators() == Faces{{1, 2, 3}});

    CHECK(from_nonfaces(SquarefreeIdeal::from_generators({1, 2}, {{1, 2}})).facets() == Faces{{1}, {2}});
    const auto p4 = from_nonfaces(SquarefreeIdeal::from_generators({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}}));
    CHECK(p4.facets() == Faces{{1, 3}, {1, 4}, {2, 4}});
    CHECK(from_nonfaces(SquarefreeIdeal::from_generators({1, 2, 3}, {})) == full_simplex({1, 2, 3}));

    CHECK_THROWS_AS(SquarefreeIdeal::from_generators({1, 2}, {{}}), InputError);
    CHECK_THROWS_AS(SquarefreeIdeal::from_generators({1, 2}, {{3}}), InputError);
    CHECK(SquarefreeIdeal::from_generators({1, 2, 3}, {{1, 2}, {1, 2, 3}}).generators() == Faces{{1, 2}});
}

TEST_CASE("round trip through the ideal on every complex with at most 4 vertices")
{
    for (std::size_t n = 1; n <= 4; ++n)
        for (const auto & c : corpus::all_complexes(corpus::vertex_range(1, n))) {
            CHECK(from_nonfaces(nonfaces_minimal(c)) == c);
            for (const Face & f : c.facets())
                for (const Face & g : c.facets())
                    CHECK((f == g || !f.is_subset_of(g)));
            CHECK(sorted(brute_faces(c)) == sorted(all_faces(c)));
        }
}

TEST_CASE("link of a link")
{
    for (const auto & c : corpus::all_complexes(corpus::vertex_range(1, 4)))
        for (const Face & a : all_faces(c))
            for (const Face & b : all_faces(link(c, a)))
                CHECK(link(link(c, a), b) == link(c, a | b));
}

TEST_CASE("join")
{
    CHECK(join(cx({1}, {{1}}), cx({2}, {{2}})).facets() == Faces{{1, 2}});
    const auto d = cx({3, 4}, {{3}, {4}});
    const auto j = join(cx({1}, {{}}), d);
    CHECK(j.ground() == VertexSet{1, 3, 4});
    CHECK(j.facets() == d.facets());
    CHECK(join(cx({1, 2}, {{1}, {2}}), d).facets() == Faces{{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    CHECK_THROWS_AS(join(d, d), DomainError);
}

TEST_CASE("join faces split along the two ground sets")
{
    const auto v1 = corpus::vertex_range(1, 3), v2 = corpus::vertex_range(4, 3);
    const auto left = corpus::all_complexes(v1), right = corpus::all_complexes(v2);
    for (const auto & a : left)
        for (const auto & b : right) {
            const auto j = join(a, b);
            for_each_subset(v1 | v2, [&](const Face & f) {
                CHECK(j.is_face(f) == (a.is_face(f & v1) && b.is_face(f & v2)));
            });
        }
}

TEST_CASE("disjoint union")
{
    CHECK(disjoint_union(cx({1, 2}, {{1, 2}}), cx({3, 4}, {{3, 4}})).facets() == Faces{{1, 2}, {3, 4}});
    const auto d = cx({1, 2}, {{1, 2}});
    const auto u = disjoint_union(d, cx({3}, {{}}));
    CHECK(u.ground() == VertexSet{1, 2, 3});
    CHECK(u.facets() == d.facets());
    CHECK(disjoint_union(cx({1}, {{1}}), cx({2}, {{2}})) == cx({1, 2}, {{1}, {2}}));
    CHECK_THROWS_AS(disjoint_union(d, d), DomainError);
}

TEST_CASE("circ")
{
    const auto z1 = cx({1}, {{}}), z2 = cx({2}, {{}});
    CHECK(nonfaces_minimal(circ(z1, z2)).generators() == Faces{{1, 2}});

    // Expand the defining condition over all 16 subsets.
    const auto d1 = cx({1, 2}, {{1}, {2}}), d2 = cx({3, 4}, {{3}, {4}});
    Faces expected;
    for_each_subset(VertexSet{1, 2, 3, 4}, [&](const Face & f) {
        if (d1.is_face(f & VertexSet{1, 2}) || d2.is_face(f & VertexSet{3, 4}))
            expected.push_back(f);
    });
    const auto c = circ(d1, d2);
    CHECK(sorted(maximal_elements(expected)) == c.facets());
    CHECK(c.facets() == Faces{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(nonfaces_minimal(c).generators() == Faces{{1, 2, 3, 4}});

    // A zero ideal on one side makes every F ∩ V2 a face, so the circ is the
    // full simplex (its ideal is I1 · 0 = 0), not the join with 2^V2.
    CHECK(circ(d1, full_simplex({3, 4})) == full_simplex({1, 2, 3, 4}));
    CHECK(circ(d1, full_simplex({3, 4})) != join(d1, full_simplex({3, 4})));
    CHECK_THROWS_AS(circ(d1, d1), DomainError);
}

TEST_CASE("circ multiplies the ideals on all pairs with at most 3 + 3 vertices")
{
    const auto v1 = corpus::vertex_range(1, 3), v2 = corpus::vertex_range(4, 3);
    for (const auto & a : corpus::all_complexes(v1))
        for (const auto & b : corpus::all_complexes(v2))
            CHECK(nonfaces_minimal(circ(a, b)) == product(nonfaces_minimal(a), nonfaces_minimal(b)));
}

TEST_CASE("restriction")
{
    CHECK(restriction(cx({1, 2}, {{1, 2}}), {2}) == Faces{{}, {1}});
    const auto d = cx({1, 2, 3}, {{1, 2}, {2, 3}});
    CHECK(restriction(d, {}) == all_faces(d));
    CHECK(restriction(cx({1, 2}, {{1}, {2}}), {1}) == Faces{{}, {2}});
}

TEST_CASE("special complexes")
{
    auto from = [](VertexSet ground, Faces gens) {
        return from_nonfaces(SquarefreeIdeal::from_generators(std::move(ground), std::move(gens)));
    };
    CHECK(is_special(from({1, 2, 3}, {{1}})));
    CHECK(is_special(from({1, 2, 3}, {{1, 2}})));
    CHECK_FALSE(is_special(from({1, 2, 3, 4}, {{1, 2}, {3, 4}})));
    CHECK_FALSE(is_special(full_simplex({1, 2})));
    CHECK_FALSE(is_special(from({1, 2, 3}, {{1, 2, 3}})));

    // z = 1, P = (x2, x3): facets must be V∖{z} and V∖W with W = {2, 3}.
    const auto d = from({1, 2, 3}, {{1, 2}, {1, 3}});
    CHECK(is_special(d));
    Faces faces;
    for_each_subset(VertexSet{1, 2, 3}, [&](const Face & f) {
        if (!(f.contains(1) && f.intersects(VertexSet{2, 3})))
            faces.push_back(f);
    });
    CHECK(sorted(maximal_elements(faces)) == Faces{{1}, {2, 3}});
    CHECK(d.facets() == Faces{{1}, {2, 3}});

    // Every special ideal on at most 4 vertices, by the facet description.
    for (const auto & c : corpus::all_complexes(corpus::vertex_range(1, 4))) {
        const auto v = c.ground();
        bool by_facets = false;
        v.for_each([&](Vertex z) {
            VertexSet rest = v;
            rest.erase(z);
            for_each_subset(rest, [&](const Face & w) {
                Faces expect = w.empty() ? Faces{rest} : Faces{rest, v - w};
                std::sort(expect.begin(), expect.end(), LexLess{});
                expect.erase(std::unique(expect.begin(), expect.end()), expect.end());
                if (sorted(maximal_elements(expect)) == c.facets())
                    by_facets = true;
            });
        });
        CHECK(is_special(c) == by_facets);
    }
}
