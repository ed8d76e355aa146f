#ifndef T1RIGID_IO_HPP
#define T1RIGID_IO_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "t1rigid/complex.hpp"
#include "t1rigid/cotangent.hpp"
#include "t1rigid/errors.hpp"
#include "t1rigid/graph.hpp"
#include "t1rigid/ideal.hpp"
#include "t1rigid/letterplace.hpp"

namespace t1rigid {

using Json = nlohmann::ordered_json;

/// Vertex identifiers assigned to labels in order of first appearance.
class LabelTable
{
public:
    LabelTable() = default;
    explicit LabelTable(std::vector<std::string> labels);

    /// Existing id of `label`, or the next free one.
    Vertex intern(const std::string & label);
    bool has(const std::string & label) const { return ids_.count(label) != 0; }
    Vertex id(const std::string & label) const { return ids_.at(label); }
    /// Label of v; the decimal id when v was never named.
    std::string label(Vertex v) const;
    /// Names v, which must not be named yet.
    void assign(Vertex v, const std::string & label);

    std::size_t size() const { return labels_.size(); }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, Vertex> ids_;
};

/// Malformed text input; the message carries line and column.
class ParseError : public InputError
{
public:
    ParseError(const std::string & source, std::size_t line, std::size_t column, const std::string & what);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

struct LabeledComplex
{
    SimplicialComplex complex;
    LabelTable labels;
};

struct LabeledIdeal
{
    SquarefreeIdeal ideal;
    LabelTable labels;
};

struct LabeledGraph
{
    Graph graph;
    LabelTable labels;
};

/// One facet per line; `{}` is the empty facet; `@ghost a b …` adds ground vertices.
LabeledComplex parse_facets(std::istream & in, const std::string & source = "input");
/// Header line `ideal`, then one generator per line; `@ghost` as for facets.
LabeledIdeal parse_ideal(std::istream & in, const std::string & source = "input");
/// One edge `u v` per line; `@vertex w …` declares vertices.
LabeledGraph parse_edges(std::istream & in, const std::string & source = "input");
/// Lines `a < b` (chains `a < b < c` allowed) or a lone element `a`.
Poset parse_poset(std::istream & in, const std::string & source = "input");

void write_facets(std::ostream & out, const SimplicialComplex & complex, const LabelTable & labels);
void write_ideal(std::ostream & out, const SquarefreeIdeal & ideal, const LabelTable & labels);

/// Labels spelling a non-negative integer become JSON numbers, others strings.
Json label_json(const std::string & label);
Json set_json(const VertexSet & s, const LabelTable & labels);
Json degree_json(const MultiDegree & d, std::size_t dim, const LabelTable & labels);
Json t1_table_json(const T1Table & table, const LabelTable & labels);

} // namespace t1rigid

#endif
