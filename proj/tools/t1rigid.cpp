#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "t1rigid/cotangent.hpp"
#include "t1rigid/graph.hpp"
#include "t1rigid/io.hpp"
#include "t1rigid/letterplace.hpp"
#include "t1rigid/oracle.hpp"
#include "t1rigid/separation.hpp"

using namespace t1rigid;

namespace {

struct Common
{
    std::string input = "-";
    std::string format;
    unsigned workers = 1;
    std::size_t max_vertices = 0;
    Limits limits;
};

template <class Fn>
auto with_input(const std::string & path, Fn && fn)
{
    if (path == "-")
        return fn(std::cin, std::string("<stdin>"));
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path);
    return fn(in, path);
}

LabeledComplex load_complex(const Common & c)
{
    const std::string format = c.format.empty() ? "facets" : c.format;
    return with_input(c.input, [&](std::istream & in, const std::string & name) -> LabeledComplex {
        if (format == "facets")
            return parse_facets(in, name);
        if (format == "ideal") {
            auto parsed = parse_ideal(in, name);
            return {from_nonfaces(parsed.ideal), std::move(parsed.labels)};
        }
        if (format == "edges") {
            auto parsed = parse_edges(in, name);
            return {independence_complex(parsed.graph), std::move(parsed.labels)};
        }
        throw InputError("format " + format + " does not describe a simplicial complex");
    });
}

LabeledGraph load_graph(const Common & c)
{
    if (!c.format.empty() && c.format != "edges")
        throw InputError("the graph command reads the edges format");
    return with_input(c.input, [](std::istream & in, const std::string & name) { return parse_edges(in, name); });
}

Poset load_poset(const std::string & path)
{
    return with_input(path, [](std::istream & in, const std::string & name) { return parse_poset(in, name); });
}

Json header(const char * command)
{
    Json out;
    out["schema"] = "1";
    out["command"] = command;
    return out;
}

void emit(const Json & j)
{
    std::cout << j.dump(2) << '\n';
}

Json maybe_degree(const std::optional<T1Entry> & e, const LabelTable & labels)
{
    return e ? degree_json(e->degree, e->dim, labels) : Json(nullptr);
}

std::string fresh_label(const LabelTable & labels, const std::string & wanted)
{
    std::string label = wanted;
    while (labels.has(label))
        label += "'";
    return label;
}

std::string facet_text(const SimplicialComplex & complex, const LabelTable & labels)
{
    std::ostringstream out;
    write_facets(out, complex, labels);
    return out.str();
}

void run_t1(const Common & c)
{
    const auto [complex, labels] = load_complex(c);
    const T1Table table = t1_table(complex, {c.workers, c.limits});
    Json out = header("t1");
    out["ground"] = set_json(complex.ground(), labels);
    out["rigid"] = table.empty();
    out["t1"] = t1_table_json(table, labels);
    emit(out);
}

void run_rigid(const Common & c)
{
    const auto [complex, labels] = load_complex(c);
    const auto witness = first_nonzero_degree(complex, c.limits);
    Json out = header("rigid");
    out["rigid"] = !witness.has_value();
    out["empty_rigid"] = is_empty_rigid(complex, c.limits);
    out["witness"] = maybe_degree(witness, labels);
    emit(out);
}

void run_inseparable(const Common & c)
{
    const auto [complex, labels] = load_complex(c);
    const auto separable = separable_vertices(complex, c.limits);
    Json out = header("inseparable");
    out["inseparable"] = separable.empty();
    Json witnesses = Json::array();
    for (const auto & [v, k] : separable) {
        Json w = degree_json({VertexSet{}, VertexSet{v}}, k, labels);
        witnesses.push_back(w);
    }
    out["witnesses"] = witnesses;
    emit(out);
}

struct SeparateOptions
{
    std::string vertex;
    bool fixpoint = false;
    std::size_t max_rounds = 64;
    std::string output;
};

// Returns false when the fixpoint iteration ran out of rounds.
bool run_separate(const Common & c, const SeparateOptions & s)
{
    auto [complex, labels] = load_complex(c);
    Json out = header("separate");
    SimplicialComplex result = complex;
    bool converged = true;

    auto name_new = [&](Vertex split, const std::vector<Vertex> & fresh) {
        const std::string base = labels.label(split);
        for (std::size_t l = 0; l < fresh.size(); ++l)
            labels.assign(fresh[l], fresh_label(labels, base + "." + std::to_string(l)));
    };

    if (s.fixpoint) {
        const FixpointReport report = separate_to_fixpoint(complex, s.max_rounds, c.limits);
        Json steps = Json::array();
        for (const SeparationStep & step : report.steps) {
            name_new(step.split_vertex, step.new_vertices);
            Json j;
            j["split_vertex"] = label_json(labels.label(step.split_vertex));
            Json fresh = Json::array();
            for (Vertex v : step.new_vertices)
                fresh.push_back(label_json(labels.label(v)));
            j["new_vertices"] = fresh;
            steps.push_back(j);
        }
        out["converged"] = report.converged;
        out["rounds"] = report.rounds();
        out["steps"] = steps;
        result = report.complex;
        converged = report.converged;
    } else {
        Vertex split = 0;
        if (!s.vertex.empty()) {
            if (!labels.has(s.vertex))
                throw InputError("vertex " + s.vertex + " does not occur in the input");
            split = labels.id(s.vertex);
        } else {
            const auto separable = separable_vertices(complex, c.limits);
            if (separable.empty()) {
                out["separable"] = false;
                out["facets"] = facet_text(complex, labels);
                emit(out);
                return true;
            }
            split = separable.front().first;
        }
        const SeparationResult r = k_separate(complex, split, c.limits);
        const SeparationCheck check = verify_separation(r, complex, c.limits);
        name_new(split, r.new_vertices);

        out["separable"] = r.k() > 0;
        out["split_vertex"] = label_json(labels.label(split));
        out["k"] = r.k();
        Json fresh = Json::array();
        for (Vertex v : r.new_vertices)
            fresh.push_back(label_json(labels.label(v)));
        out["new_vertices"] = fresh;
        Json comps = Json::array();
        for (const auto & comp : r.components) {
            Json faces = Json::array();
            for (const Face & f : comp)
                faces.push_back(set_json(f, labels));
            comps.push_back(faces);
        }
        out["components"] = comps;
        out["verified"] = check.passed();
        result = r.separated;
    }

    out["facets"] = facet_text(result, labels);
    if (!s.output.empty()) {
        std::ofstream file(s.output);
        if (!file)
            throw InputError("cannot write " + s.output);
        write_facets(file, result, labels);
    }
    emit(out);
    return converged;
}

void run_letterplace(const Common & c, const std::string & q_path, bool verify)
{
    const Poset p = load_poset(c.input);
    const Poset q = load_poset(q_path);
    const SquarefreeIdeal ideal = letterplace_ideal(p, q);
    const LabelTable labels(letterplace_labels(p, q));

    Json out = header("letterplace");
    std::ostringstream text;
    write_ideal(text, ideal, labels);
    out["ideal"] = text.str();
    out["generators"] = ideal.generators().size();
    out["antichain"] = is_antichain(p);
    const bool rigid = letterplace_is_rigid(p, q);
    out["rigid"] = rigid;
    if (verify || !rigid) {
        const auto witness = first_nonzero_degree(from_nonfaces(ideal), c.limits);
        if (verify)
            out["rigid_direct"] = !witness.has_value();
        out["witness"] = maybe_degree(witness, labels);
    }
    emit(out);
}

void run_graph(const Common & c)
{
    const auto [g, labels] = load_graph(c);
    const auto alpha = condition_alpha(g, c.limits);
    const auto beta = condition_beta(g, c.limits);
    const SimplicialComplex complex = independence_complex(g);

    Json out = header("graph");
    out["vertices"] = g.vertices().size();
    out["edges"] = g.edge_count();
    out["inseparable"] = graph_is_inseparable(g);
    out["rigid"] = !alpha && !beta;
    switch (classify_rigid_structural(g)) {
    case StructuralVerdict::rigid: out["structural_verdict"] = "rigid"; break;
    case StructuralVerdict::not_rigid: out["structural_verdict"] = "not_rigid"; break;
    case StructuralVerdict::criterion_inapplicable: out["structural_verdict"] = "criterion_inapplicable"; break;
    }

    Json witnesses;
    witnesses["alpha"] = nullptr;
    witnesses["beta"] = nullptr;
    Json degrees = Json::array();
    if (alpha) {
        Json w;
        w["A"] = set_json(alpha->a, labels);
        w["i"] = label_json(labels.label(alpha->i));
        witnesses["alpha"] = w;
        const MultiDegree d{alpha->a, VertexSet{alpha->i}};
        degrees.push_back(degree_json(d, t1_dim(complex, d, c.limits), labels));
    }
    if (beta) {
        Json w;
        w["A"] = set_json(beta->a, labels);
        w["edge"] = set_json(VertexSet{beta->edge.first, beta->edge.second}, labels);
        witnesses["beta"] = w;
        const MultiDegree d{beta->a, VertexSet{beta->edge.first, beta->edge.second}};
        degrees.push_back(degree_json(d, t1_dim(complex, d, c.limits), labels));
    }
    witnesses["degrees"] = degrees;
    out["witnesses"] = witnesses;
    emit(out);
}

void run_oracle_check(const Common & c)
{
    const auto [complex, labels] = load_complex(c);
    c.limits.check(complex.ground().size(), "oracle-check ranges over every subset of the ground set");
    std::size_t checked = 0;
    Json mismatches = Json::array();
    for_each_subset(complex.ground(), [&](const Face & b) {
        if (b.empty())
            return;
        ++checked;
        const std::size_t fast = t1_dim_neg(complex, b, c.limits);
        const std::size_t slow = t1_dim_oracle(complex, b);
        if (fast != slow) {
            Json m;
            m["B"] = set_json(b, labels);
            m["combinatorial"] = fast;
            m["oracle"] = slow;
            mismatches.push_back(m);
        }
    });
    Json out = header("oracle-check");
    out["agree"] = mismatches.empty();
    out["degrees_checked"] = checked;
    out["mismatches"] = mismatches;
    emit(out);
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{"T1 dimensions, separations and rigidity of Stanley-Reisner rings"};
    app.require_subcommand(1);

    Common common;
    auto add_common = [&](CLI::App * sub, bool formats) {
        sub->add_option("input", common.input, "input file, or - for standard input");
        if (formats)
            sub->add_option("--format", common.format, "input format")
                ->check(CLI::IsMember({"facets", "ideal", "edges", "poset"}));
        sub->add_option("--workers", common.workers, "worker threads")->check(CLI::PositiveNumber);
        sub->add_option("--max-vertices", common.max_vertices, "raise or lower the vertex budget of exhaustive scans");
    };

    auto * t1 = app.add_subcommand("t1", "every nonzero graded piece of T1");
    auto * rigid = app.add_subcommand("rigid", "is T1 zero; first nonzero degree as witness");
    auto * insep = app.add_subcommand("inseparable", "is T1 zero in every degree -e_i");
    auto * separate = app.add_subcommand("separate", "k-separation at a vertex, or iterated to a fixpoint");
    auto * letter = app.add_subcommand("letterplace", "letterplace ideal L(P,Q) and its rigidity");
    auto * graph = app.add_subcommand("graph", "rigidity and separability of an edge ideal");
    auto * oracle = app.add_subcommand("oracle-check", "compare the component count with the kernel computation");
    for (auto * sub : {t1, rigid, insep, separate, graph, oracle})
        add_common(sub, true);
    add_common(letter, false);

    SeparateOptions sep;
    separate->add_option("--vertex", sep.vertex, "vertex to split (default: the first separable one)");
    separate->add_flag("--fixpoint", sep.fixpoint, "separate repeatedly until inseparable");
    separate->add_option("--max-rounds", sep.max_rounds, "round budget for --fixpoint")->check(CLI::PositiveNumber);
    separate->add_option("--output,-o", sep.output, "also write the separated complex to this facet file");

    std::string q_path;
    bool verify = false;
    letter->add_option("Q", q_path, "target poset file")->required();
    letter->add_flag("--verify", verify, "also decide rigidity from T1 directly");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError & e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    if (common.max_vertices != 0) {
        common.limits.max_vertices = common.max_vertices;
        std::cerr << "note: vertex budget set to " << common.max_vertices << " by --max-vertices\n";
    }

    try {
        if (t1->parsed())
            run_t1(common);
        else if (rigid->parsed())
            run_rigid(common);
        else if (insep->parsed())
            run_inseparable(common);
        else if (separate->parsed())
            return run_separate(common, sep) ? 0 : 3;
        else if (letter->parsed())
            run_letterplace(common, q_path, verify);
        else if (graph->parsed())
            run_graph(common);
        else if (oracle->parsed())
            run_oracle_check(common);
    } catch (const InputError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const BudgetError & e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
