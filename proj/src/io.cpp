#include "t1rigid/io.hpp"

#include <cctype>
#include <istream>
#include <optional>
#include <ostream>

namespace t1rigid {

LabelTable::LabelTable(std::vector<std::string> labels)
{
    for (auto & l : labels)
        intern(l);
}

Vertex LabelTable::intern(const std::string & label)
{
    const auto it = ids_.find(label);
    if (it != ids_.end())
        return it->second;
    const auto v = static_cast<Vertex>(labels_.size());
    labels_.push_back(label);
    ids_.emplace(label, v);
    return v;
}

std::string LabelTable::label(Vertex v) const
{
    return v < labels_.size() && !labels_[v].empty() ? labels_[v] : std::to_string(v);
}

void LabelTable::assign(Vertex v, const std::string & label)
{
    if (ids_.count(label) || (v < labels_.size() && !labels_[v].empty()))
        throw InputError("label " + label + " is already in use");
    if (v >= labels_.size())
        labels_.resize(v + 1);
    labels_[v] = label;
    ids_.emplace(label, v);
}

ParseError::ParseError(const std::string & source, std::size_t line, std::size_t column, const std::string & what)
    : InputError(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + what),
      line_(line), column_(column)
{
}

namespace {

struct Token
{
    std::string text;
    std::size_t column;
};

struct Line
{
    std::size_t number;
    std::vector<Token> tokens;
};

// Non-blank lines with comments removed.
std::vector<Line> tokenize(std::istream & in)
{
    std::vector<Line> out;
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (const auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        Line line{number, {}};
        std::size_t k = 0;
        while (k < raw.size()) {
            while (k < raw.size() && std::isspace(static_cast<unsigned char>(raw[k])))
                ++k;
            const std::size_t start = k;
            while (k < raw.size() && !std::isspace(static_cast<unsigned char>(raw[k])))
                ++k;
            if (k > start)
                line.tokens.push_back({raw.substr(start, k - start), start + 1});
        }
        if (!line.tokens.empty())
            out.push_back(std::move(line));
    }
    return out;
}

void check_label(const std::string & source, const Line & line, const Token & t)
{
    for (char c : t.text)
        if (c == '{' || c == '}' || c == '<' || c == '@')
            throw ParseError(source, line.number, t.column, "'" + t.text + "' is not a vertex label");
}

// A face line of the facet or ideal format; nullopt for the token `{}`.
std::optional<std::vector<Token>> face_tokens(const std::string & source, const Line & line)
{
    if (line.tokens.front().text == "{}") {
        if (line.tokens.size() > 1)
            throw ParseError(source, line.number, line.tokens[1].column, "'{}' must stand alone on its line");
        return std::nullopt;
    }
    for (const Token & t : line.tokens)
        check_label(source, line, t);
    return line.tokens;
}

std::vector<Face> read_faces(const std::string & source, const std::vector<Line> & lines, std::size_t first,
                             LabelTable & labels, VertexSet & ground, bool allow_empty)
{
    std::vector<Face> faces;
    for (std::size_t n = first; n < lines.size(); ++n) {
        const Line & line = lines[n];
        if (line.tokens.front().text == "@ghost") {
            for (std::size_t k = 1; k < line.tokens.size(); ++k) {
                check_label(source, line, line.tokens[k]);
                ground.insert(labels.intern(line.tokens[k].text));
            }
            continue;
        }
        if (line.tokens.front().text.front() == '@')
            throw ParseError(source, line.number, line.tokens.front().column,
                             "unknown directive " + line.tokens.front().text);
        const auto tokens = face_tokens(source, line);
        if (!tokens && !allow_empty)
            throw ParseError(source, line.number, line.tokens.front().column,
                             "an empty generator would make the unit ideal");
        Face f;
        if (tokens)
            for (const Token & t : *tokens)
                f.insert(labels.intern(t.text));
        ground |= f;
        faces.push_back(f);
    }
    return faces;
}

} // namespace

LabeledComplex parse_facets(std::istream & in, const std::string & source)
{
    const auto lines = tokenize(in);
    LabelTable labels;
    VertexSet ground;
    auto faces = read_faces(source, lines, 0, labels, ground, true);
    if (faces.empty())
        throw ParseError(source, lines.empty() ? 1 : lines.back().number, 1,
                         "no facets; write {} for the complex whose only face is empty");
    return {SimplicialComplex::from_facets(ground, std::move(faces)), std::move(labels)};
}

LabeledIdeal parse_ideal(std::istream & in, const std::string & source)
{
    const auto lines = tokenize(in);
    if (lines.empty() || lines.front().tokens.size() != 1 || lines.front().tokens.front().text != "ideal")
        throw ParseError(source, lines.empty() ? 1 : lines.front().number, 1, "expected the header line 'ideal'");
    LabelTable labels;
    VertexSet ground;
    auto gens = read_faces(source, lines, 1, labels, ground, false);
    return {SquarefreeIdeal::from_generators(ground, std::move(gens)), std::move(labels)};
}

LabeledGraph parse_edges(std::istream & in, const std::string & source)
{
    LabelTable labels;
    VertexSet vertices;
    std::vector<Edge> edges;
    for (const Line & line : tokenize(in)) {
        if (line.tokens.front().text == "@vertex") {
            for (std::size_t k = 1; k < line.tokens.size(); ++k) {
                check_label(source, line, line.tokens[k]);
                vertices.insert(labels.intern(line.tokens[k].text));
            }
            continue;
        }
        if (line.tokens.size() != 2) {
            const Token & t = line.tokens.size() > 2 ? line.tokens[2] : line.tokens.back();
            throw ParseError(source, line.number, t.column, "an edge line holds exactly two vertices");
        }
        for (const Token & t : line.tokens)
            check_label(source, line, t);
        if (line.tokens[0].text == line.tokens[1].text)
            throw ParseError(source, line.number, line.tokens[1].column, "loops are not allowed");
        const Vertex u = labels.intern(line.tokens[0].text);
        const Vertex v = labels.intern(line.tokens[1].text);
        vertices.insert(u);
        vertices.insert(v);
        edges.push_back(make_edge(u, v));
    }
    return {Graph(vertices, edges), std::move(labels)};
}

Poset parse_poset(std::istream & in, const std::string & source)
{
    std::vector<std::string> names;
    LabelTable labels;
    std::vector<std::pair<std::size_t, std::size_t>> less;
    auto element = [&](const Line & line, const Token & t) {
        check_label(source, line, t);
        const bool fresh = !labels.has(t.text);
        const Vertex v = labels.intern(t.text);
        if (fresh)
            names.push_back(t.text);
        return static_cast<std::size_t>(v);
    };
    for (const Line & line : tokenize(in)) {
        const auto & tk = line.tokens;
        if (tk.size() % 2 == 0)
            throw ParseError(source, line.number, tk.back().column, "expected 'a < b' or a single element");
        std::size_t prev = element(line, tk[0]);
        for (std::size_t k = 1; k + 1 < tk.size(); k += 2) {
            if (tk[k].text != "<")
                throw ParseError(source, line.number, tk[k].column, "expected '<', found '" + tk[k].text + "'");
            const std::size_t next = element(line, tk[k + 1]);
            less.emplace_back(prev, next);
            prev = next;
        }
    }
    if (names.empty())
        throw ParseError(source, 1, 1, "the poset has no elements");
    try {
        return Poset(std::move(names), less);
    } catch (const InputError & e) {
        throw InputError(source + ": " + e.what());
    }
}

namespace {

void write_set(std::ostream & out, const VertexSet & s, const LabelTable & labels)
{
    if (s.empty()) {
        out << "{}";
        return;
    }
    bool first = true;
    s.for_each([&](Vertex v) {
        out << (first ? "" : " ") << labels.label(v);
        first = false;
    });
}

void write_ghosts(std::ostream & out, const VertexSet & ghosts, const LabelTable & labels)
{
    if (ghosts.empty())
        return;
    out << "@ghost";
    ghosts.for_each([&](Vertex v) { out << ' ' << labels.label(v); });
    out << '\n';
}

} // namespace

void write_facets(std::ostream & out, const SimplicialComplex & complex, const LabelTable & labels)
{
    write_ghosts(out, complex.ghost_vertices(), labels);
    for (const Face & f : complex.facets()) {
        write_set(out, f, labels);
        out << '\n';
    }
}

void write_ideal(std::ostream & out, const SquarefreeIdeal & ideal, const LabelTable & labels)
{
    out << "ideal\n";
    VertexSet used;
    for (const Face & g : ideal.generators())
        used |= g;
    write_ghosts(out, ideal.ground() - used, labels);
    for (const Face & g : ideal.generators()) {
        write_set(out, g, labels);
        out << '\n';
    }
}

Json label_json(const std::string & label)
{
    const bool digits = !label.empty() && label.size() <= 18
                        && label.find_first_not_of("0123456789") == std::string::npos
                        && (label.size() == 1 || label.front() != '0');
    if (digits)
        return std::stoll(label);
    return label;
}

Json set_json(const VertexSet & s, const LabelTable & labels)
{
    Json out = Json::array();
    s.for_each([&](Vertex v) { out.push_back(label_json(labels.label(v))); });
    return out;
}

Json degree_json(const MultiDegree & d, std::size_t dim, const LabelTable & labels)
{
    Json out;
    out["A"] = set_json(d.a, labels);
    out["B"] = set_json(d.b, labels);
    out["dim"] = dim;
    return out;
}

Json t1_table_json(const T1Table & table, const LabelTable & labels)
{
    Json out = Json::array();
    for (const T1Entry & e : table.entries())
        out.push_back(degree_json(e.degree, e.dim, labels));
    return out;
}

} // namespace t1rigid
