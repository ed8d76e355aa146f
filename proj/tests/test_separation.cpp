#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "t1rigid/cotangent.hpp"
#include "t1rigid/graph.hpp"
#include "t1rigid/ideal.hpp"
#include "t1rigid/separation.hpp"

using namespace t1rigid;
using Faces = std::vector<Face>;

namespace {

SimplicialComplex points(std::size_t n)
{
    Faces f;
    for (Vertex v = 1; v <= n; ++v)
        f.push_back({v});
    return SimplicialComplex::from_facets(corpus::vertex_range(1, n), f);
}

SimplicialComplex rename(const SimplicialComplex & c, Vertex from, Vertex to)
{
    auto swap_in = [&](const Face & f) {
        Face g = f;
        if (g.contains(from)) {
            g.erase(from);
            g.insert(to);
        }
        return g;
    };
    Faces facets;
    for (const Face & f : c.facets())
        facets.push_back(swap_in(f));
    return SimplicialComplex::from_facets(swap_in(c.ground()), facets);
}

} // namespace

TEST_CASE("separable vertices")
{
    using List = std::vector<std::pair<Vertex, std::size_t>>;
    CHECK(separable_vertices(points(3)) == List{{1, 1}, {2, 1}, {3, 1}});
    CHECK(separable_vertices(points(4)) == List{{1, 2}, {2, 2}, {3, 2}, {4, 2}});
    CHECK(separable_vertices(independence_complex(path_graph(4))).empty());
    CHECK(separable_vertices(full_simplex({1, 2})).empty());
}

TEST_CASE("separating the triangle")
{
    const auto tri = points(3);
    const auto r = k_separate(tri, 3);
    CHECK(r.split_vertex == 3);
    CHECK(r.k() == 1);
    CHECK(r.new_vertices == std::vector<Vertex>{4, 5});
    CHECK(r.components == std::vector<Faces>{{{1}}, {{2}}});
    CHECK(r.separated.ground() == VertexSet{1, 2, 4, 5});
    // x1x2, x1y0, x2y1
    const auto expected = SquarefreeIdeal::from_generators({1, 2, 4, 5}, {{1, 2}, {1, 4}, {2, 5}});
    CHECK(nonfaces_minimal(r.separated) == expected);
    CHECK(verify_separation(r, tri).passed());
}

TEST_CASE("separating the complete graph on four vertices")
{
    const auto k4 = points(4);
    CHECK(k4 == independence_complex(complete_graph(4)));
    const auto r = k_separate(k4, 4);
    CHECK(r.k() == 2);
    CHECK(r.new_vertices == std::vector<Vertex>{5, 6, 7});
    CHECK(r.components.size() == 3);
    const auto check = verify_separation(r, k4);
    CHECK(check.passed());
    CHECK(nonfaces_minimal(r.separated).generators().size() == nonfaces_minimal(k4).generators().size());
}

TEST_CASE("k = 0 only renames the vertex")
{
    const auto p4 = independence_complex(path_graph(4));
    for (Vertex i = 1; i <= 4; ++i) {
        const auto r = k_separate(p4, i);
        CHECK(r.k() == 0);
        CHECK(r.new_vertices == std::vector<Vertex>{5});
        CHECK(r.separated == rename(p4, i, 5));
        CHECK(verify_separation(r, p4).passed());
    }
    // Cone point: N_{i} is empty and there is no component at all.
    const auto cone = SimplicialComplex::from_facets({1, 2, 3}, {{1, 2}, {1, 3}});
    const auto r = k_separate(cone, 1);
    CHECK(r.components.empty());
    CHECK(r.k() == 0);
    CHECK(verify_separation(r, cone).passed());
}

TEST_CASE("split vertex must be a 0-face")
{
    const auto ghosted = SimplicialComplex::from_facets({1, 2, 3}, {{1}, {2}});
    CHECK_THROWS_AS(k_separate(ghosted, 3), DomainError);
    CHECK_THROWS_AS(k_separate(ghosted, 9), DomainError);
}

TEST_CASE("tampered separations fail")
{
    const auto tri = points(3);
    auto r = k_separate(tri, 3);
    // Both components glued to Ω_0: v_0 then divides no generator.
    r.separated = SimplicialComplex::from_facets({1, 2, 4, 5}, {{4, 5}, {1, 5}, {2, 5}});
    auto check = verify_separation(r, tri);
    CHECK_FALSE(check.passed());
    CHECK_FALSE(check.every_new_vertex_used);

    // Not a separation of this complex at all.
    r = k_separate(tri, 3);
    r.separated = full_simplex({1, 2, 4, 5});
    check = verify_separation(r, tri);
    CHECK_FALSE(check.passed());
    CHECK_FALSE(check.collapses);
}

TEST_CASE("verification on every small complex")
{
    for (std::size_t n = 1; n <= 5; ++n)
        for (const auto & c : corpus::complexes_up_to_iso(corpus::vertex_range(1, n)))
            for (Vertex i : c.zero_faces().to_vector()) {
                const auto r = k_separate(c, i);
                CHECK(r.k() == t1_dim_neg(c, {i}));
                const auto check = verify_separation(r, c);
                CHECK(check.collapses);
                CHECK(check.same_generator_count);
                CHECK(check.every_new_vertex_used);
                CHECK(check.new_degrees_vanish);
            }

    std::mt19937_64 rng(3);
    for (int t = 0; t < 60; ++t) {
        const auto c = corpus::random_complex(rng, 7, 1);
        for (Vertex i : c.zero_faces().to_vector())
            CHECK(verify_separation(k_separate(c, i), c).passed());
    }
}

TEST_CASE("separating until inseparable")
{
    const auto tri = separate_to_fixpoint(points(3), 64);
    CHECK(tri.converged);
    CHECK(tri.rounds() >= 1);
    CHECK(tri.rounds() <= 3);
    CHECK(tri.steps.front().split_vertex == 1);
    CHECK(is_inseparable(tri.complex));

    const auto k4 = separate_to_fixpoint(points(4), 64);
    CHECK(k4.converged);
    CHECK(is_inseparable(k4.complex));

    const auto p4 = independence_complex(path_graph(4));
    const auto none = separate_to_fixpoint(p4, 64);
    CHECK(none.converged);
    CHECK(none.rounds() == 0);
    CHECK(none.complex == p4);

    // two points next to a triangle boundary: three rounds
    const auto mixed = SimplicialComplex::from_facets({1, 2, 3, 4, 5}, {{1}, {2}, {3, 4}, {3, 5}, {4, 5}});
    const auto slow = separate_to_fixpoint(mixed, 64);
    CHECK(slow.converged);
    CHECK(slow.rounds() == 3);
    CHECK(is_inseparable(slow.complex));
    const auto cut = separate_to_fixpoint(mixed, 2);
    CHECK_FALSE(cut.converged);
    CHECK(cut.rounds() == 2);
    CHECK_FALSE(is_inseparable(cut.complex));

    const auto stuck = separate_to_fixpoint(points(3), 0);
    CHECK_FALSE(stuck.converged);
    CHECK(stuck.complex == points(3));
}
