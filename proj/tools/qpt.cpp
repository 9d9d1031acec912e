// Command-line driver: quiver-with-potential mutation and restriction,
// Jacobian dimensions, idempotent subalgebra quivers, exchange-graph
// exploration and contraction, silting g-vector dynamics, tilt lifting, and
// the two-polygon flip procedure. All output is deterministic.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qpt/graph_io.hpp"
#include "qpt/path_algebra.hpp"
#include "qpt/polygon.hpp"
#include "qpt/qp_io.hpp"
#include "qpt/quiver.hpp"
#include "qpt/silting.hpp"

using namespace qpt;

namespace {

int default_max_degree() {
    if (const char* env = std::getenv("QPT_MAX_DEGREE")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return kDefaultMaxDegree;
}

std::vector<int> resolve_subset(const QP& qp, const std::vector<std::string>& names) {
    std::vector<int> out;
    for (const auto& nm : names) {
        int v = qp.quiver.vertex_index(nm);
        if (v < 0) throw UnknownVertex("no vertex named '" + nm + "'");
        out.push_back(v);
    }
    return out;
}

void require_valid(const QP& qp) {
    auto diags = validate_qp(qp);
    if (diags.empty()) return;
    std::string msg = "input violates quiver-with-potential invariants:";
    for (const auto& d : diags) msg += "\n  [" + d.code + "] " + d.message;
    throw ParseError(msg);
}

struct Options {
    std::string input;
    std::string vertex;
    std::vector<std::string> subset;
    int depth = 4;
    int bound = 32;
    int max_degree = default_max_degree();
    std::string direction = "both";
    std::string out_path;
    std::string dot_path;
    std::string json_path;
};

Direction parse_direction(const std::string& d) {
    if (d == "forward") return Direction::Forward;
    if (d == "both") return Direction::Both;
    throw ParseError("direction must be 'forward' or 'both'");
}

int cmd_validate(const Options& opt) {
    QP qp = load_qp_file(opt.input);
    auto diags = validate_qp(qp);
    if (diags.empty()) {
        std::cout << "valid: " << qp_brief(qp) << "\n";
        return 0;
    }
    for (const auto& d : diags) std::cout << "[" << d.code << "] " << d.message << "\n";
    return 1;
}

int cmd_mutate(const Options& opt) {
    QP qp = load_qp_file(opt.input);
    require_valid(qp);
    int k = qp.quiver.vertex_index(opt.vertex);
    if (k < 0) throw UnknownVertex("no vertex named '" + opt.vertex + "'");
    QP out = mutate(qp, k);
    std::string text = serialize_qp(out);
    if (!opt.out_path.empty()) write_text_file(opt.out_path, text);
    else std::cout << text;
    std::cerr << "mutated at '" << opt.vertex << "': " << qp_brief(out) << "\n";
    return 0;
}

int cmd_restrict(const Options& opt) {
    QP qp = load_qp_file(opt.input);
    require_valid(qp);
    QP out = restrict_qp(qp, resolve_subset(qp, opt.subset));
    std::string text = serialize_qp(out);
    if (!opt.out_path.empty()) write_text_file(opt.out_path, text);
    else std::cout << text;
    return 0;
}

int cmd_jacobian(const Options& opt) {
    QP qp = load_qp_file(opt.input);
    require_valid(qp);
    GradedDims gd = jacobian_dims(qp, opt.max_degree);
    for (const auto& [deg, dim] : gd.dims) std::cout << "degree " << deg << ": " << dim << "\n";
    switch (gd.verdict) {
        case Finiteness::Finite: std::cout << "finite, total dimension " << gd.total << "\n"; break;
        case Finiteness::InfiniteDetected: std::cout << "infinite\n"; break;
        case Finiteness::Unknown:
            std::cout << "unknown at bound " << gd.bound << "\n";
            break;
    }
    return 0;
}

int cmd_eje(const Options& opt) {
    QP qp = load_qp_file(opt.input);
    require_valid(qp);
    auto sub = VertexSubset::of(qp, resolve_subset(qp, opt.subset));
    EjeQuiver e = eje_quiver(qp, sub, opt.max_degree);
    QP out = eje_to_qp(e);
    std::vector<EjeArrowNote> notes;
    for (const auto& a : e.arrows) {
        EjeArrowNote note;
        for (int ai : a.witness) note.witness.push_back(qp.quiver.arrows[ai].id);
        notes.push_back(note);
    }
    std::string text = serialize_qp_with_witnesses(out, notes);
    if (!opt.out_path.empty()) write_text_file(opt.out_path, text);
    else std::cout << text;
    if (e.has_loops) std::cerr << "note: the idempotent subalgebra quiver has loops\n";
    return 0;
}

int cmd_explore(const Options& opt) {
    QP qp = load_qp_file(opt.input);
    require_valid(qp);
    ExchangeGraph eg = explore(qp, opt.depth, parse_direction(opt.direction));
    std::size_t frontier = 0;
    for (const auto& v : eg.vertices)
        if (!v.interior()) ++frontier;
    std::cout << eg.vertices.size() << " hearts, " << eg.edges.size() << " tilts, " << frontier
              << " frontier\n";
    auto rep = regularity_report(eg);
    if (rep.regular)
        std::cout << "interior is (" << rep.degree << "," << rep.degree << ")-regular on "
                  << rep.interior.size() << " hearts\n";
    if (!opt.json_path.empty()) write_text_file(opt.json_path, exchange_graph_json(eg));
    if (!opt.dot_path.empty()) write_text_file(opt.dot_path, exchange_graph_dot(eg));
    return 0;
}

int cmd_quotient(const Options& opt) {
    QP qp = load_qp_file(opt.input);
    require_valid(qp);
    auto sub = VertexSubset::of(qp, resolve_subset(qp, opt.subset));
    ExchangeGraph eg = explore(qp, opt.depth, parse_direction(opt.direction));
    QuotientGraph qg = quotient_graph(eg, sub);
    std::cout << qg.sub.vertices.size() << " compatible hearts in " << qg.classes.size()
              << " classes, " << qg.edges.size() << " quotient tilts\n";
    auto rep = regularity_report(qg);
    if (rep.regular)
        std::cout << "interior classes are (" << rep.degree << "," << rep.degree << ")-regular on "
                  << rep.interior.size() << " classes\n";
    if (!opt.json_path.empty()) write_text_file(opt.json_path, quotient_graph_json(qg));
    if (!opt.dot_path.empty()) write_text_file(opt.dot_path, quotient_graph_dot(qg));
    return 0;
}

int cmd_silting(const Options& opt) {
    QP qp = load_qp_file(opt.input);
    require_valid(qp);
    Direction dir = parse_direction(opt.direction);
    if (opt.subset.empty()) {
        SiltingGraph sg = seg_explore(qp, opt.depth, dir);
        ExchangeGraph eg = explore(qp, opt.depth, dir);
        bool iso = seg_isomorphic(eg, sg);
        std::cout << sg.vertices.size() << " silting objects, " << sg.edges.size()
                  << " mutations; exchange-graph mirror " << (iso ? "verified" : "FAILED") << "\n";
        if (!opt.json_path.empty()) write_text_file(opt.json_path, silting_graph_json(sg));
        return iso ? 0 : 4;
    }
    auto sub = VertexSubset::of(qp, resolve_subset(qp, opt.subset));
    ExchangeGraph eg = explore(qp, opt.depth, dir);
    QuotientGraph qg = quotient_graph(eg, sub);
    SegBulletResult res = seg_bullet(eg, qg, sub, opt.bound);
    std::cout << res.graph.vertices.size() << " partial silting objects over "
              << qg.classes.size() << " classes, " << res.verified_edges << " edges verified, "
              << res.skipped_classes.size() << " classes and " << res.skipped_edges.size()
              << " edges outside the lifted region\n";
    if (!opt.json_path.empty()) write_text_file(opt.json_path, seg_bullet_json(res));
    return 0;
}

int cmd_lift(const Options& opt) {
    QP qp = load_qp_file(opt.input);
    require_valid(qp);
    auto sub = VertexSubset::of(qp, resolve_subset(qp, opt.subset));
    int k = qp.quiver.vertex_index(opt.vertex);
    if (k < 0) throw UnknownVertex("no vertex named '" + opt.vertex + "'");
    Heart h = standard_heart(qp);
    auto steps = lift_tilt_search(h, k, sub, opt.bound);
    if (steps.empty()) {
        std::cout << "no tilts needed\n";
    } else {
        for (const auto& s : steps)
            std::cout << "tilt at vertex " << qp.quiver.vertices[s.vertex] << " (" << s.display
                      << ")\n";
    }
    return 0;
}

int cmd_polygon(const Options& opt) {
    PolygonSpec ps = parse_polygon(read_text_file(opt.input));
    FlipSequence seq = exconvrep_sequence(ps.pair, ps.tri);
    std::cout << seq.flips.size() << " flips\n";
    for (const auto& c : seq.flips)
        std::cout << "flip (" << c.first << "," << c.second << ")\n";
    if (!opt.out_path.empty()) {
        PolygonSpec out = ps;
        out.tri = seq.final;
        write_text_file(opt.out_path, serialize_polygon(out));
    }
    if (!opt.json_path.empty())
        write_text_file(opt.json_path, serialize_qp(polygon_quiver(ps.pair, ps.tri)));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"combinatorial invariants of quivers with potential and their quotients"};
    app.require_subcommand(1);
    Options opt;

    auto add_input = [&](CLI::App* c) {
        c->add_option("input", opt.input, "input file")->required();
    };

    auto* validate = app.add_subcommand("validate", "check quiver-with-potential invariants");
    add_input(validate);

    auto* mut = app.add_subcommand("mutate", "mutate at a vertex");
    add_input(mut);
    mut->add_option("-k,--vertex", opt.vertex, "vertex to mutate at")->required();
    mut->add_option("-o,--out", opt.out_path, "output file");

    auto* res = app.add_subcommand("restrict", "full subquiver on a vertex subset");
    add_input(res);
    res->add_option("-I,--subset", opt.subset, "vertices to keep")->required();
    res->add_option("-o,--out", opt.out_path, "output file");

    auto* jac = app.add_subcommand("jacobian", "graded Jacobian-algebra dimensions");
    add_input(jac);
    jac->add_option("--max-degree", opt.max_degree, "degree bound");

    auto* eje = app.add_subcommand("eje", "idempotent subalgebra quiver");
    add_input(eje);
    eje->add_option("-I,--subset", opt.subset, "subcategory vertices")->required();
    eje->add_option("--max-degree", opt.max_degree, "degree bound");
    eje->add_option("-o,--out", opt.out_path, "output file");

    auto* exp = app.add_subcommand("explore", "exchange graph of simple tilts");
    add_input(exp);
    exp->add_option("--depth", opt.depth, "exploration depth");
    exp->add_option("--direction", opt.direction, "forward|both");
    exp->add_option("--json", opt.json_path, "write the graph as JSON");
    exp->add_option("--dot", opt.dot_path, "write the graph as DOT");

    auto* quo = app.add_subcommand("quotient", "contract tilts at subcategory simples");
    add_input(quo);
    quo->add_option("-I,--subset", opt.subset, "subcategory vertices")->required();
    quo->add_option("--depth", opt.depth, "exploration depth");
    quo->add_option("--direction", opt.direction, "forward|both");
    quo->add_option("--json", opt.json_path, "write the graph as JSON");
    quo->add_option("--dot", opt.dot_path, "write the graph as DOT");

    auto* sil = app.add_subcommand("silting", "silting g-vector exchange graph");
    add_input(sil);
    sil->add_option("-I,--subset", opt.subset, "verify the partial-silting graph over I");
    sil->add_option("--depth", opt.depth, "exploration depth");
    sil->add_option("--direction", opt.direction, "forward|both");
    sil->add_option("--bound", opt.bound, "lift search bound");
    sil->add_option("--json", opt.json_path, "write the graph as JSON");

    auto* lift = app.add_subcommand("lift", "search a tilt sequence exhibiting a lift");
    add_input(lift);
    lift->add_option("-I,--subset", opt.subset, "subcategory vertices")->required();
    lift->add_option("-k,--vertex", opt.vertex, "simple to lift")->required();
    lift->add_option("--bound", opt.bound, "search bound");

    auto* poly = app.add_subcommand("polygon", "two-polygon flip procedure");
    add_input(poly);
    poly->add_option("-o,--out", opt.out_path, "write the final triangulation");
    poly->add_option("--qp", opt.json_path, "write the triangulation quiver");

    CLI11_PARSE(app, argc, argv);

    try {
        if (validate->parsed()) return cmd_validate(opt);
        if (mut->parsed()) return cmd_mutate(opt);
        if (res->parsed()) return cmd_restrict(opt);
        if (jac->parsed()) return cmd_jacobian(opt);
        if (eje->parsed()) return cmd_eje(opt);
        if (exp->parsed()) return cmd_explore(opt);
        if (quo->parsed()) return cmd_quotient(opt);
        if (sil->parsed()) return cmd_silting(opt);
        if (lift->parsed()) return cmd_lift(opt);
        if (poly->parsed()) return cmd_polygon(opt);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::InvalidInput: return 1;
            case ErrorKind::Unsupported: return 2;
            case ErrorKind::BoundExceeded: return 3;
            case ErrorKind::Internal: return 4;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
