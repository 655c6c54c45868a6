#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "gorenstein/errors.hpp"

using namespace gorenstein;
using namespace gorenstein::cli;

namespace {

PolytopeKind kind_arg(const std::string& text) { return parse_kind(text); }

void add_kind_and_file(CLI::App* cmd, std::string& kind, std::string& file) {
    cmd->add_option("kind", kind, "Polytope: base or indep")->required()->check(
        CLI::IsMember({"base", "indep", "independence"}));
    cmd->add_option("file", file, "Edge-list file")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Gorenstein classification of graphic matroid polytopes"};
    app.require_subcommand(1);
    app.fallthrough();

    CommonOptions common;
    app.add_option("--dot", common.dot_path, "Write a DOT drawing of the input or generated graph");
    app.add_option("--guard-nodes", common.limits.node_guard, "Node guard for lattice point enumeration");
    app.add_option("--guard-vertices", common.limits.vertex_guard, "Guard on enumerated polytope vertices");

    std::string kind;
    std::string file;

    auto* check = app.add_subcommand("check", "Combinatorial Gorenstein checker");
    add_kind_and_file(check, kind, file);

    auto* oracle = app.add_subcommand("oracle", "Lattice-polytope oracle");
    add_kind_and_file(oracle, kind, file);
    OracleOptions oracle_options;
    oracle->add_option("--max-delta", oracle_options.max_delta, "Largest delta searched (default dim + 1)");
    oracle->add_flag("--hstar", oracle_options.hstar, "Compute the h*-vector");
    oracle->add_option("--normality", oracle_options.normality, "Probe normality for k = 2..K");
    oracle->add_option("--dump", oracle_options.dump_path, "Write vertices, lattice and facets to a file");

    auto* certify = app.add_subcommand("certify", "Construction certificate with replay check");
    add_kind_and_file(certify, kind, file);

    auto* generate = app.add_subcommand("generate", "Build a graph with a generative operation");
    GenerateOptions gen;
    generate->add_option("op", gen.op, "seed, glue, subdivide, collide, attach or blowup")
        ->required()
        ->check(CLI::IsMember({"seed", "glue", "subdivide", "collide", "attach", "blowup"}));
    generate->add_option("inputs", gen.inputs, "Input edge-list files");
    generate->add_option("--cycle", gen.cycle, "seed: cycle length");
    generate->add_flag("--k4", gen.k4, "seed: K4");
    generate->add_flag("--k2", gen.k2, "seed: K2");
    generate->add_option("--delta", gen.delta, "Gorenstein index");
    generate->add_option("--edge", gen.edges, "Edge id per input (default: first admissible edge)")
        ->delimiter(',');
    generate->add_option("--flip", gen.flips, "Orientation flag per input (0 or 1)")->delimiter(',');
    generate->add_option("--m", gen.multiplicity, "blowup: multiplicity");
    generate->add_option("-o,--output", gen.output_path, "Also write the edge list to this file");

    auto* sweep = app.add_subcommand("sweep", "Exhaustive check over small 2-connected graphs");
    SweepCliOptions sweep_options;
    sweep->add_option("--max-vertices", sweep_options.max_vertices, "Vertex bound");
    sweep->add_option("--kind", sweep_options.kind, "base, indep or indep-equivalence");
    sweep->add_flag("--cross-validate", sweep_options.cross_validate, "Compare every verdict with the oracle");
    sweep->add_option("--jobs", sweep_options.jobs, "Worker threads");

    auto* replay = app.add_subcommand("replay", "Replay a certificate and re-run the checker");
    std::string graph_file;
    replay->add_option("certificate", file, "Certificate or certify report (JSON)")->required();
    replay->add_option("--graph", graph_file, "Also test isomorphism with this edge-list file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        CommandOutput out;
        if (check->parsed()) {
            out = cmd_check(kind_arg(kind), file, common);
        } else if (oracle->parsed()) {
            out = cmd_oracle(kind_arg(kind), file, oracle_options, common);
        } else if (certify->parsed()) {
            out = cmd_certify(kind_arg(kind), file, common);
        } else if (generate->parsed()) {
            out = cmd_generate(gen, common);
        } else if (sweep->parsed()) {
            out = cmd_sweep(sweep_options, common);
        } else {
            out = cmd_replay(file, graph_file, common);
        }
        if (!out.text.empty()) {
            std::cout << out.text;
        } else {
            std::cout << out.document.dump(2) << '\n';
        }
        return out.exit_code;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kExitParse;
    } catch (const ResourceError& e) {
        std::cerr << "guard exceeded: " << e.what() << '\n';
        return kExitGuard;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition violated: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const InternalContradiction& e) {
        std::cerr << "internal contradiction: " << e.what() << '\n';
        return 5;
    }
}
