#include "t1rigid/cotangent.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>
#include <thread>

#include "t1rigid/detail/face_table.hpp"

namespace t1rigid {

using detail::FaceTable;
using detail::Mask;
using detail::Scratch;

bool degree_less(const MultiDegree & x, const MultiDegree & y)
{
    if (x.a != y.a)
        return graded_less(x.a, y.a);
    return graded_less(x.b, y.b);
}

namespace {

std::vector<Face> expand_sorted(const FaceTable & table, const std::vector<Mask> & masks)
{
    std::vector<Face> out;
    out.reserve(masks.size());
    for (Mask m : masks)
        out.push_back(table.expand(m));
    std::sort(out.begin(), out.end(), GradedLess{});
    return out;
}

// Submasks in graded order (size, then lex on the renumbered vertices).
std::vector<Mask> graded_submasks(Mask set, bool include_empty)
{
    std::vector<Mask> out;
    for (Mask s = set;; s = (s - 1) & set) {
        if (s != 0 || include_empty)
            out.push_back(s);
        if (s == 0)
            break;
    }
    std::sort(out.begin(), out.end(), [](Mask x, Mask y) {
        if (std::popcount(x) != std::popcount(y))
            return std::popcount(x) < std::popcount(y);
        return graded_less(VertexSet::from_word(x), VertexSet::from_word(y));
    });
    return out;
}

Mask link_vertices(const FaceTable & table, Mask a)
{
    Mask out = 0;
    for (Mask rest = table.full() & ~a; rest != 0; rest &= rest - 1) {
        const Mask v = rest & (~rest + 1);
        if (table.face(a | v))
            out |= v;
    }
    return out;
}

} // namespace

DegreeWitnessSets witness_sets(const SimplicialComplex & complex, const VertexSet & b, const Limits & limits)
{
    const FaceTable table(complex, limits);
    const Mask bm = table.compress(b);
    const Mask rest = table.full() & ~bm;

    std::vector<Mask> n_b, n_b_tilde, m_b;
    for (Mask s = rest;; s = (s - 1) & rest) {
        if (!table.face(s)) {
            m_b.push_back(s);
        } else if (!table.face(s | bm)) {
            n_b.push_back(s);
            for (Mask sub = (bm - 1) & bm;; sub = (sub - 1) & bm) {
                if (!table.face(s | sub)) {
                    n_b_tilde.push_back(s);
                    break;
                }
                if (sub == 0)
                    break;
            }
        }
        if (s == 0)
            break;
    }
    return {expand_sorted(table, n_b), expand_sorted(table, n_b_tilde), expand_sorted(table, m_b)};
}

std::vector<std::size_t> ComparabilityGraph::component_labels() const
{
    std::vector<std::size_t> parent(nodes.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto & [i, j] : edges) {
        const std::size_t ri = find(i), rj = find(j);
        if (ri != rj)
            parent[std::max(ri, rj)] = std::min(ri, rj);
    }
    std::vector<std::size_t> label(nodes.size());
    std::vector<std::size_t> number(nodes.size(), nodes.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const std::size_t r = find(i);
        if (number[r] == nodes.size())
            number[r] = next++;
        label[i] = number[r];
    }
    return label;
}

std::size_t ComparabilityGraph::component_count() const
{
    const auto labels = component_labels();
    return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

ComparabilityGraph comparability_graph(const SimplicialComplex & complex, const VertexSet & b, const Limits & limits)
{
    ComparabilityGraph g;
    g.nodes = witness_sets(complex, b, limits).n_b;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        for (std::size_t j = i + 1; j < g.nodes.size(); ++j)
            if (g.nodes[i].is_subset_of(g.nodes[j]) || g.nodes[j].is_subset_of(g.nodes[i]))
                g.edges.emplace_back(i, j);
    return g;
}

std::size_t t1_dim_neg(const SimplicialComplex & complex, const VertexSet & b, const Limits & limits)
{
    if (b.empty())
        throw DomainError("T1 in degree -b needs a nonempty support B");
    const FaceTable table(complex, limits);
    Scratch scratch;
    return detail::dim_in_link(table, 0, table.compress(b), scratch);
}

std::size_t t1_dim(const SimplicialComplex & complex, const MultiDegree & degree, const Limits & limits)
{
    if (degree.a.intersects(degree.b))
        throw InputError("a multidegree needs disjoint supports A and B");
    if (degree.b.empty() || !complex.is_face(degree.a))
        return 0;
    const SimplicialComplex lk = link(complex, degree.a);
    if (!degree.b.is_subset_of(lk.zero_faces()))
        return 0;
    return t1_dim_neg(lk, degree.b, limits);
}

std::size_t T1Table::dim(const MultiDegree & degree) const
{
    const auto it = std::lower_bound(entries_.begin(), entries_.end(), degree,
                                     [](const T1Entry & e, const MultiDegree & d) { return degree_less(e.degree, d); });
    return it != entries_.end() && it->degree == degree ? it->dim : 0;
}

namespace {

std::vector<Mask> faces_in_graded_order(const FaceTable & table)
{
    std::vector<Mask> faces;
    for (Mask m : graded_submasks(table.full(), true))
        if (table.face(m))
            faces.push_back(m);
    return faces;
}

} // namespace

T1Table t1_table(const SimplicialComplex & complex, const TableOptions & options)
{
    const FaceTable table(complex, options.limits);
    const std::vector<Mask> faces = faces_in_graded_order(table);
    const unsigned workers = std::max(1u, std::min<unsigned>(options.workers, static_cast<unsigned>(faces.size())));

    std::vector<std::vector<T1Entry>> partial(workers);
    std::vector<std::exception_ptr> failure(workers);
    auto run = [&](unsigned w) {
        try {
            Scratch scratch;
            for (std::size_t k = w; k < faces.size(); k += workers) {
                const Mask a = faces[k];
                const Mask lv = link_vertices(table, a);
                for (Mask bm = lv; bm != 0; bm = (bm - 1) & lv)
                    if (const std::size_t d = detail::dim_in_link(table, a, bm, scratch))
                        partial[w].push_back({{table.expand(a), table.expand(bm)}, d});
            }
        } catch (...) {
            failure[w] = std::current_exception();
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w)
            threads.emplace_back(run, w);
        for (auto & t : threads)
            t.join();
    }
    for (const auto & f : failure)
        if (f)
            std::rethrow_exception(f);

    std::vector<T1Entry> entries;
    for (auto & p : partial)
        entries.insert(entries.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    std::sort(entries.begin(), entries.end(),
              [](const T1Entry & x, const T1Entry & y) { return degree_less(x.degree, y.degree); });
    return T1Table(complex, std::move(entries));
}

std::optional<T1Entry> first_nonzero_degree(const SimplicialComplex & complex, const Limits & limits)
{
    const FaceTable table(complex, limits);
    Scratch scratch;
    for (Mask a : faces_in_graded_order(table))
        for (Mask bm : graded_submasks(link_vertices(table, a), false))
            if (const std::size_t d = detail::dim_in_link(table, a, bm, scratch))
                return T1Entry{{table.expand(a), table.expand(bm)}, d};
    return std::nullopt;
}

bool is_empty_rigid(const SimplicialComplex & complex, const Limits & limits)
{
    const FaceTable table(complex, limits);
    Scratch scratch;
    const Mask vertices = link_vertices(table, 0);
    for (Mask bm = vertices; bm != 0; bm = (bm - 1) & vertices)
        if (detail::dim_in_link(table, 0, bm, scratch) != 0)
            return false;
    return true;
}

bool is_rigid(const SimplicialComplex & complex, const Limits & limits)
{
    return !first_nonzero_degree(complex, limits).has_value();
}

bool is_inseparable(const SimplicialComplex & complex, const Limits & limits)
{
    const FaceTable table(complex, limits);
    Scratch scratch;
    for (Mask rest = link_vertices(table, 0); rest != 0; rest &= rest - 1)
        if (detail::dim_in_link(table, 0, rest & (~rest + 1), scratch) != 0)
            return false;
    return true;
}

} // namespace t1rigid
