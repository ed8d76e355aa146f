#include "t1rigid/letterplace.hpp"

#include <algorithm>

#include "t1rigid/errors.hpp"

namespace t1rigid {

Poset::Poset(std::vector<std::string> labels, const std::vector<std::pair<std::size_t, std::size_t>> & less)
    : labels_(std::move(labels))
{
    const std::size_t n = labels_.size();
    order_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        order_[a * n + a] = 1;
    for (const auto & [a, b] : less) {
        if (a >= n || b >= n)
            throw InputError("poset relation mentions an unknown element");
        if (a == b)
            throw InputError("poset relation " + labels_[a] + " < " + labels_[a] + " is a cycle");
        order_[a * n + b] = 1;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t a = 0; a < n; ++a)
            if (order_[a * n + k])
                for (std::size_t b = 0; b < n; ++b)
                    if (order_[k * n + b])
                        order_[a * n + b] = 1;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (order_[a * n + b] && order_[b * n + a])
                throw InputError("poset relations contain a cycle through " + labels_[a] + " and " + labels_[b]);

    // Sorting by the number of elements below gives a linear extension.
    std::vector<std::size_t> below(n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            below[a] += order_[b * n + a];
    extension_.resize(n);
    for (std::size_t a = 0; a < n; ++a)
        extension_[a] = a;
    std::stable_sort(extension_.begin(), extension_.end(),
                     [&](std::size_t x, std::size_t y) { return below[x] < below[y]; });
}

Poset Poset::chain(std::size_t n)
{
    std::vector<std::string> labels;
    std::vector<std::pair<std::size_t, std::size_t>> less;
    for (std::size_t k = 0; k < n; ++k) {
        labels.push_back(std::to_string(k + 1));
        if (k > 0)
            less.emplace_back(k - 1, k);
    }
    return Poset(std::move(labels), less);
}

Poset Poset::antichain(std::size_t n)
{
    std::vector<std::string> labels;
    for (std::size_t k = 0; k < n; ++k)
        labels.push_back(std::to_string(k + 1));
    return Poset(std::move(labels), {});
}

std::vector<IsotoneMap> isotone_maps(const Poset & p, const Poset & q)
{
    if (p.size() == 0 || q.size() == 0)
        throw DomainError("isotone maps need nonempty posets");
    std::vector<IsotoneMap> out;
    std::vector<std::size_t> values(p.size());
    const auto & ext = p.linear_extension();
    auto rec = [&](auto && self, std::size_t k) -> void {
        if (k == ext.size()) {
            out.push_back({values});
            return;
        }
        const std::size_t e = ext[k];
        for (std::size_t v = 0; v < q.size(); ++v) {
            bool ok = true;
            for (std::size_t j = 0; j < k && ok; ++j)
                if (p.leq(ext[j], e) && !q.leq(values[ext[j]], v))
                    ok = false;
            if (!ok)
                continue;
            values[e] = v;
            self(self, k + 1);
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> letterplace_labels(const Poset & p, const Poset & q)
{
    std::vector<std::string> out;
    for (const auto & a : p.labels())
        for (const auto & b : q.labels())
            out.push_back(a + ":" + b);
    return out;
}

SquarefreeIdeal letterplace_ideal(const Poset & p, const Poset & q)
{
    std::vector<Face> gens;
    for (const IsotoneMap & phi : isotone_maps(p, q)) {
        Face g;
        for (std::size_t a = 0; a < p.size(); ++a)
            g.insert(letterplace_variable(a, phi.values[a], q.size()));
        gens.push_back(g);
    }
    return SquarefreeIdeal::from_generators(VertexSet::range(static_cast<Vertex>(p.size() * q.size())),
                                            std::move(gens));
}

bool is_antichain(const Poset & p)
{
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = 0; b < p.size(); ++b)
            if (a != b && p.leq(a, b))
                return false;
    return true;
}

bool letterplace_is_rigid(const Poset & p, const Poset & q)
{
    // With |Q| = 1 the ideal is the single monomial over P, a product of
    // |P| principal primes.
    if (q.size() == 1 && p.size() >= 2)
        return false;
    return is_antichain(p);
}

Graph cm_bipartite_graph(const Poset & p)
{
    const auto n = static_cast<Vertex>(p.size());
    std::vector<Edge> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = 0; j < n; ++j)
            if (p.leq(i, j))
                edges.emplace_back(i, n + j);
    return Graph(VertexSet::range(2 * n), edges);
}

std::vector<std::string> cm_bipartite_labels(const Poset & p)
{
    std::vector<std::string> out;
    for (const auto & l : p.labels())
        out.push_back("p" + l);
    for (const auto & l : p.labels())
        out.push_back("q" + l);
    return out;
}

} // namespace t1rigid
