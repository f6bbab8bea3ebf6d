#include "cli.hpp"

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bcolab/b_coloring.hpp"
#include "bcolab/circulating_orientation.hpp"
#include "bcolab/errors.hpp"
#include "bcolab/generators.hpp"
#include "bcolab/graph.hpp"
#include "bcolab/harness.hpp"
#include "bcolab/io.hpp"
#include "bcolab/path_decomposition.hpp"
#include "bcolab/reduction.hpp"

namespace bcolab {

namespace {

Graph load_graph(const std::string& path) {
    const std::string text = read_text_file(path);
    switch (sniff_kind(text)) {
    case FileKind::CircOri: return parse_circori(text).graph;
    case FileKind::BCol: return parse_bcol(text).graph;
    default: throw ParseError(path + ": expected a circori or bcol file");
    }
}

void emit(const std::string& content, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << content;
    } else {
        write_text_file(out_path, content);
        out << "wrote " << out_path << "\n";
    }
}

struct ReduceArgs {
    std::string input;
    std::string pd_file;
    std::string prefix;
    bool force_trivial_no = false;
};

int do_reduce(const ReduceArgs& a, std::ostream& out) {
    const CircOriInstance inst = parse_circori(read_text_file(a.input));
    ReducedInstance red;
    try {
        red = build_instance(inst);
    } catch (const ReductionError& e) {
        if (e.kind() != ReductionErrorKind::ParityInfeasible || !a.force_trivial_no) throw;
        const BColInstance no = trivial_no_instance();
        write_text_file(a.prefix + ".bcol", serialize_bcol(no));
        write_text_file(a.prefix + ".rolemap",
                        "c parity-infeasible source: canonical NO instance, no roles\n");
        out << "parity infeasible; wrote the canonical NO instance\n";
        out << "k = " << no.k << "\n";
        out << "|V(H)| = " << no.graph.vertex_count() << "\n";
        out << "|E(H)| = " << no.graph.edge_count() << "\n";
        return 0;
    }
    write_text_file(a.prefix + ".bcol", serialize_bcol(bcol_instance(red)));
    write_text_file(a.prefix + ".rolemap", serialize_rolemap(red));
    out << "k = " << red.k << "\n";
    out << "|V(H)| = " << red.h.vertex_count() << "\n";
    out << "|E(H)| = " << red.h.edge_count() << "\n";
    if (!a.pd_file.empty()) {
        const PathDecomposition pd_src = parse_pd(read_text_file(a.pd_file));
        const PathDecomposition pd_h = build_pd_for_H(red, pd_src);
        write_text_file(a.prefix + ".pd", serialize_pd(pd_h, red.h));
        const int ws = pd_width(pd_src);
        const int wh = pd_width(pd_h);
        out << "pd width: source = " << ws << ", lifted = " << wh << " (increment " << wh - ws
            << ")\n";
    }
    return 0;
}

int do_verify_orientation(const std::string& graph_path, const std::string& ori_path,
                          std::ostream& out) {
    const CircOriInstance inst = parse_circori(read_text_file(graph_path));
    const Orientation o = Orientation::build(inst.graph, parse_orientation(read_text_file(ori_path)));
    const int n = inst.graph.vertex_count();
    std::vector<long long> outw(n, 0), inw(n, 0);
    for (int ei = 0; ei < inst.graph.edge_count(); ++ei) {
        const Arc& a = o.arcs()[ei];
        outw[inst.graph.index_of(a.tail)] += inst.weight_at(ei);
        inw[inst.graph.index_of(a.head)] += inst.weight_at(ei);
    }
    for (int vi = 0; vi < n; ++vi) {
        if (outw[vi] != inw[vi]) {
            out << "orientation: FAIL: vertex " << inst.graph.vertices()[vi] << " has out-weight "
                << outw[vi] << ", in-weight " << inw[vi] << "\n";
            return 1;
        }
    }
    out << "orientation: circulating (W = " << total_weight(inst) << ")\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"laboratory for the pathwidth-parameterized b-coloring construction"};
    app.require_subcommand(1);

    ReduceArgs reduce_args;
    auto* reduce = app.add_subcommand("reduce", "build the target instance from a circori file");
    reduce->add_option("input", reduce_args.input, "source circori file")->required();
    reduce->add_option("--pd", reduce_args.pd_file, "path decomposition of the source to lift");
    reduce->add_option("-o,--out", reduce_args.prefix, "output prefix")->required();
    reduce->add_flag("--force-trivial-no", reduce_args.force_trivial_no,
                     "on parity-infeasible input emit the canonical NO instance instead of failing");

    RoundtripParams rt;
    std::string rt_perturb = "none";
    bool rt_json = false;
    auto* roundtrip = app.add_subcommand("roundtrip", "generate, solve, reduce, audit, extract");
    roundtrip->add_option("--seed", rt.seed, "base seed");
    roundtrip->add_option("--trials", rt.trials, "number of trials");
    roundtrip->add_option("--n", rt.n, "maximum source vertices");
    roundtrip->add_option("--cycles", rt.cycles, "superposed flow cycles");
    roundtrip->add_option("--wmax", rt.wmax, "maximum per-cycle flow");
    roundtrip->add_option("--perturb", rt_perturb, "none, recolor, or superstar");
    roundtrip->add_flag("--json", rt_json, "emit the report as JSON");

    std::string solve_input, solve_out;
    long long solve_budget = -1;
    auto* solve = app.add_subcommand("solve", "exhaustive solvers");
    solve->require_subcommand(1);
    auto* solve_circori = solve->add_subcommand("circori", "find a circulating orientation");
    solve_circori->add_option("input", solve_input, "circori file")->required();
    solve_circori->add_option("--budget", solve_budget, "edge-count cap");
    solve_circori->add_option("-o,--out", solve_out, "write the orientation here");
    auto* solve_bcol = solve->add_subcommand("bcol", "find a b-coloring");
    solve_bcol->add_option("input", solve_input, "bcol file")->required();
    solve_bcol->add_option("--budget", solve_budget, "assignment cap");
    solve_bcol->add_option("-o,--out", solve_out, "write the coloring here");

    std::string verify_graph, verify_file;
    auto* verify = app.add_subcommand("verify", "checkers; exit 0 on pass, 1 on fail");
    verify->require_subcommand(1);
    auto* verify_coloring = verify->add_subcommand("coloring", "b-coloring check");
    verify_coloring->add_option("graph", verify_graph, "bcol file")->required();
    verify_coloring->add_option("coloring", verify_file, "coloring file")->required();
    auto* verify_pd = verify->add_subcommand("pd", "path decomposition axioms");
    verify_pd->add_option("graph", verify_graph, "bcol or circori file")->required();
    verify_pd->add_option("pd", verify_file, "pd file")->required();
    auto* verify_ori = verify->add_subcommand("orientation", "balance check");
    verify_ori->add_option("graph", verify_graph, "circori file")->required();
    verify_ori->add_option("orientation", verify_file, "orientation file")->required();

    std::string order_graph, order_file, order_out;
    auto* order = app.add_subcommand("order", "linear orders from decompositions");
    order->require_subcommand(1);
    auto* order_from_pd = order->add_subcommand("from-pd", "leftmost-bag order");
    order_from_pd->add_option("graph", order_graph, "bcol or circori file")->required();
    order_from_pd->add_option("pd", order_file, "pd file")->required();
    order_from_pd->add_option("-o,--out", order_out, "write the order here");
    auto* order_mw = order->add_subcommand("module-width", "module width of an order");
    order_mw->add_option("graph", order_graph, "bcol or circori file")->required();
    order_mw->add_option("order", order_file, "order file")->required();

    std::uint64_t gen_seed = 1;
    int gen_n = 6, gen_m = 8, gen_cycles = 2, gen_wmax = 2, gen_width = 3;
    double gen_density = 0.5;
    std::string gen_prefix;
    auto* gen = app.add_subcommand("gen", "seeded instance generators");
    gen->require_subcommand(1);
    auto* gen_yes = gen->add_subcommand("yes", "satisfiable instance with a planted orientation");
    gen_yes->add_option("--seed", gen_seed, "seed");
    gen_yes->add_option("--n", gen_n, "vertices");
    gen_yes->add_option("--cycles", gen_cycles, "superposed flow cycles");
    gen_yes->add_option("--wmax", gen_wmax, "maximum per-cycle flow");
    gen_yes->add_option("-o,--out", gen_prefix, "output prefix")->required();
    auto* gen_random = gen->add_subcommand("random", "connected instance, arbitrary answer");
    gen_random->add_option("--seed", gen_seed, "seed");
    gen_random->add_option("--n", gen_n, "vertices");
    gen_random->add_option("--m", gen_m, "edges");
    gen_random->add_option("--wmax", gen_wmax, "maximum edge weight");
    gen_random->add_option("-o,--out", gen_prefix, "output prefix")->required();
    auto* gen_pdg = gen->add_subcommand("pd-graph", "unit-weight graph with a known-width pd");
    gen_pdg->add_option("--seed", gen_seed, "seed");
    gen_pdg->add_option("--n", gen_n, "vertices");
    gen_pdg->add_option("--width", gen_width, "target pd width");
    gen_pdg->add_option("--density", gen_density, "window fill probability");
    gen_pdg->add_option("-o,--out", gen_prefix, "output prefix")->required();

    std::string ext_bcol, ext_rolemap, ext_coloring, ext_out;
    auto* extract = app.add_subcommand("extract", "orientation from a b-coloring of the target");
    extract->add_option("bcol", ext_bcol, "bcol file")->required();
    extract->add_option("rolemap", ext_rolemap, "rolemap file")->required();
    extract->add_option("coloring", ext_coloring, "coloring file")->required();
    extract->add_option("-o,--out", ext_out, "write the orientation here");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("bcolab");
    for (const std::string& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (reduce->parsed()) return do_reduce(reduce_args, out);

        if (roundtrip->parsed()) {
            rt.perturb = parse_perturb_mode(rt_perturb);
            const RunReport report = run_roundtrip(rt);
            if (rt_json)
                out << report.to_json();
            else
                report.print_human(out);
            return report.ok() ? 0 : 1;
        }

        if (solve_circori->parsed()) {
            const CircOriInstance inst = parse_circori(read_text_file(solve_input));
            CircOriBruteOptions opts;
            if (solve_budget >= 0) opts.max_edges = static_cast<int>(solve_budget);
            const auto o = solve_circori_brute(inst, opts);
            if (!o) {
                err << "no circulating orientation exists\n";
                return 1;
            }
            emit(serialize_orientation(*o, inst.graph), solve_out, out);
            return 0;
        }

        if (solve_bcol->parsed()) {
            const BColInstance inst = parse_bcol(read_text_file(solve_input));
            BColBruteOptions opts;
            if (solve_budget >= 0) opts.max_assignments = solve_budget;
            const auto c = solve_bcol_brute(inst, opts);
            if (!c) {
                err << "no b-coloring with " << inst.k << " colors\n";
                return 1;
            }
            emit(serialize_coloring(*c, inst.graph), solve_out, out);
            return 0;
        }

        if (verify_coloring->parsed()) {
            const BColInstance inst = parse_bcol(read_text_file(verify_graph));
            const Coloring c = parse_coloring(read_text_file(verify_file));
            const BColoringCheck chk = check_b_coloring(inst, c);
            if (!chk.ok) {
                out << "b-coloring: FAIL: " << chk.reason << "\n";
                return 1;
            }
            out << "b-coloring: ok (k = " << inst.k << ")\n";
            return 0;
        }

        if (verify_pd->parsed()) {
            const Graph g = load_graph(verify_graph);
            const PathDecomposition pd = parse_pd(read_text_file(verify_file));
            const PdValidation val = validate_pd(g, pd);
            if (!val.ok) {
                out << "path decomposition: FAIL: " << val.message << "\n";
                return 1;
            }
            out << "path decomposition: ok (width = " << pd_width(pd) << ")\n";
            return 0;
        }

        if (verify_ori->parsed()) return do_verify_orientation(verify_graph, verify_file, out);

        if (order_from_pd->parsed()) {
            const Graph g = load_graph(order_graph);
            const PathDecomposition pd = parse_pd(read_text_file(order_file));
            emit(serialize_order(pd_to_linear_order(g, pd), g), order_out, out);
            return 0;
        }

        if (order_mw->parsed()) {
            const Graph g = load_graph(order_graph);
            const LinearOrder ord = parse_order(read_text_file(order_file));
            out << module_width(g, ord) << "\n";
            return 0;
        }

        if (gen_yes->parsed()) {
            const auto [inst, witness] = gen_yes_instance(gen_seed, gen_n, gen_cycles, gen_wmax);
            write_text_file(gen_prefix + ".circori", serialize_circori(inst));
            write_text_file(gen_prefix + ".orientation", serialize_orientation(witness, inst.graph));
            out << "n = " << inst.graph.vertex_count() << ", m = " << inst.graph.edge_count()
                << ", W = " << total_weight(inst) << "\n";
            return 0;
        }

        if (gen_random->parsed()) {
            const CircOriInstance inst = gen_random_instance(gen_seed, gen_n, gen_m, gen_wmax);
            write_text_file(gen_prefix + ".circori", serialize_circori(inst));
            out << "n = " << inst.graph.vertex_count() << ", m = " << inst.graph.edge_count()
                << ", W = " << total_weight(inst)
                << ", parity " << (parity_feasible(inst) ? "feasible" : "infeasible") << "\n";
            return 0;
        }

        if (gen_pdg->parsed()) {
            const auto [g, pd] = gen_pd_graph(gen_seed, gen_n, gen_width, gen_density);
            const int m = g.edge_count();
            const CircOriInstance inst =
                CircOriInstance::build(g, std::vector<int>(static_cast<std::size_t>(m), 1));
            write_text_file(gen_prefix + ".circori", serialize_circori(inst));
            write_text_file(gen_prefix + ".pd", serialize_pd(pd, g));
            out << "n = " << g.vertex_count() << ", m = " << m << ", pd width = " << pd_width(pd)
                << "\n";
            return 0;
        }

        if (extract->parsed()) {
            const ReducedInstance red =
                reduced_from_files(read_text_file(ext_bcol), read_text_file(ext_rolemap));
            const Coloring c = parse_coloring(read_text_file(ext_coloring));
            const Orientation o = extract_orientation(red, c);
            emit(serialize_orientation(o, red.source.graph), ext_out, out);
            return 0;
        }
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ExtractionError& e) {
        err << "extraction error: " << e.what() << "\n";
        return e.kind() == ExtractionErrorKind::BalanceViolation ? 4 : 3;
    } catch (const InternalInvariantError& e) {
        err << "internal invariant violated: " << e.what() << "\n";
        return 4;
    } catch (const PreconditionError& e) {
        err << "precondition violated: " << e.what() << "\n";
        return 3;
    }

    err << "no subcommand selected\n";
    return 2;
}

} // namespace bcolab
