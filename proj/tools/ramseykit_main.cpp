// Command-line front end: graph files in, JSON certificates and exit codes out.
//
// Exit codes: 0/1/2 encode the decision per subcommand (see README);
// 10 = unreadable or malformed file, 11 = bad usage, 12 = colouring/graph
// mismatch, 13 = certificate schema mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ramseykit/avoidance.hpp"
#include "ramseykit/certificate.hpp"
#include "ramseykit/digest.hpp"
#include "ramseykit/equivalence.hpp"
#include "ramseykit/errors.hpp"
#include "ramseykit/io.hpp"

namespace {

constexpr int kExitFile = 10;
constexpr int kExitUsage = 11;
constexpr int kExitMismatch = 12;
constexpr int kExitSchema = 13;

ramsey::cert::InputRecord record_input(const std::string& path, const ramsey::Graph& g) {
    return {path, ramsey::file_digest(path), g.vertex_count(), g.edge_count()};
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ramsey::ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct ArrowsArgs {
    std::string graph_file;
    int colours = 2;
    int clique = 3;
    std::string strategy = "auto";
    std::uint64_t max_nodes = 10'000'000;
    std::uint64_t seed = 0;
    std::string solver_result_file;
};

int run_arrows(const ArrowsArgs& args) {
    auto gf = ramsey::read_graph_file(args.graph_file);
    ramsey::detect::SearchBudget budget{args.max_nodes, args.seed};

    ramsey::avoid::ArrowingCertificate cert;
    if (args.strategy == "external") {
        std::string path = args.solver_result_file;
        if (path.empty()) {
            const char* env = std::getenv("RAMSEYKIT_SOLVER_RESULT");
            if (env != nullptr) path = env;
        }
        if (path.empty()) {
            std::cerr << "external strategy needs --solver-result or RAMSEYKIT_SOLVER_RESULT\n";
            return kExitUsage;
        }
        auto parsed = ramsey::cnf::parse_solver_result(read_text_file(path));
        cert = ramsey::avoid::decide_arrows_external(gf.graph, args.colours, args.clique, parsed);
    } else {
        ramsey::avoid::Strategy strategy;
        if (args.strategy == "exhaustive")
            strategy = ramsey::avoid::Strategy::exhaustive;
        else if (args.strategy == "backtracking")
            strategy = ramsey::avoid::Strategy::backtracking;
        else if (args.strategy == "auto")
            strategy = ramsey::avoid::Strategy::automatic;
        else {
            std::cerr << "unknown strategy: " << args.strategy << '\n';
            return kExitUsage;
        }
        cert = ramsey::avoid::decide_arrows(gf.graph, args.colours, args.clique, strategy, budget);
    }

    auto doc = ramsey::cert::arrows_document(record_input(args.graph_file, gf.graph), gf.graph,
                                             cert, args.strategy, budget);
    std::cout << doc.dump(2) << '\n';
    switch (cert.outcome) {
        case ramsey::avoid::ArrowsOutcome::arrows: return 0;
        case ramsey::avoid::ArrowsOutcome::not_arrows: return 1;
        case ramsey::avoid::ArrowsOutcome::inconclusive: return 2;
    }
    return kExitUsage;
}

struct TheoremArgs {
    std::string graph_file;
    std::string colouring_file;
    int clique = 3;
    int colours = 3;
    std::uint64_t max_nodes = 10'000'000;
    std::uint64_t seed = 0;
};

int run_theorem_check(const TheoremArgs& args) {
    auto gf = ramsey::read_graph_file(args.graph_file);

    std::optional<ramsey::EdgeColouring> colouring = gf.colouring;
    if (!args.colouring_file.empty()) {
        auto cf = ramsey::read_graph_file(args.colouring_file);
        if (cf.graph != gf.graph) {
            std::cerr << "colouring file edges do not match the graph file\n";
            return kExitMismatch;
        }
        colouring = cf.colouring;
    }
    if (!colouring) {
        std::cerr << "no colouring: the graph file is uncoloured and no --colouring was given\n";
        return kExitMismatch;
    }
    if (colouring->colour_count() != args.colours) {
        std::cerr << "colouring has " << colouring->colour_count() << " colours, expected "
                  << args.colours << '\n';
        return kExitMismatch;
    }
    if (!colouring->is_total_on(gf.graph)) {
        std::cerr << "colouring is not a total colouring of the graph\n";
        return kExitMismatch;
    }

    ramsey::ProblemSpec spec(args.clique, args.colours);
    ramsey::detect::SearchBudget budget{args.max_nodes, args.seed};
    auto outcome = ramsey::equiv::theorem_check(gf.graph, *colouring, spec, budget);

    auto doc = ramsey::cert::theorem_document(record_input(args.graph_file, gf.graph), gf.graph,
                                              *colouring, spec, outcome, budget);
    std::cout << doc.dump(2) << '\n';
    switch (outcome.kind) {
        case ramsey::equiv::OutcomeKind::mono_pair_found: return 0;
        case ramsey::equiv::OutcomeKind::ramsey_refuted: return 1;
        case ramsey::equiv::OutcomeKind::inconclusive: return 2;
    }
    return kExitUsage;
}

int run_known(const std::string& name, const std::string& out_file) {
    auto k = ramsey::avoid::known_colouring(name);
    if (out_file.empty()) {
        ramsey::write_graph(std::cout, k.graph, k.colouring);
    } else {
        ramsey::write_graph_file(out_file, k.graph, &k.colouring);
    }
    return 0;
}

int run_verify(const std::string& cert_file, const std::string& graph_file) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_text_file(cert_file));
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "certificate is not valid JSON: " << e.what() << '\n';
        return kExitSchema;
    }
    auto gf = ramsey::read_graph_file(graph_file);
    auto report =
        ramsey::cert::verify_document(doc, gf.graph, ramsey::file_digest(graph_file));
    for (const auto& issue : report.issues) std::cerr << "verify: " << issue << '\n';
    if (!report.schema_ok) return kExitSchema;
    if (!report.ok) return 1;
    std::cout << "certificate verified: all witnesses replay\n";
    return 0;
}

struct AvoidArgs {
    std::string graph_file;
    int colours = 2;
    int target_clique = 0;
    int target_pair = 0;
    std::uint64_t max_nodes = 10'000'000;
    std::string out_file;
};

int run_avoid(const AvoidArgs& args) {
    if ((args.target_clique > 0) == (args.target_pair > 0)) {
        std::cerr << "choose exactly one of --target-clique / --target-pair\n";
        return kExitUsage;
    }
    auto gf = ramsey::read_graph_file(args.graph_file);
    auto target = args.target_clique > 0
                      ? ramsey::avoid::AvoidTarget::clique(args.target_clique)
                      : ramsey::avoid::AvoidTarget::pair(args.target_pair);
    auto res = ramsey::avoid::search_avoiding_colouring(gf.graph, args.colours, target,
                                                        {args.max_nodes, 0});
    switch (res.status) {
        case ramsey::avoid::SearchOutcome::Status::found:
            if (args.out_file.empty())
                ramsey::write_graph(std::cout, gf.graph, *res.colouring);
            else
                ramsey::write_graph_file(args.out_file, gf.graph, &*res.colouring);
            return 0;
        case ramsey::avoid::SearchOutcome::Status::proven_absent:
            std::cerr << "no avoiding colouring exists (search was complete)\n";
            return 1;
        case ramsey::avoid::SearchOutcome::Status::budget_exhausted:
            std::cerr << "search budget exhausted before a decision\n";
            return 2;
    }
    return kExitUsage;
}

struct EncodeArgs {
    std::string graph_file;
    int colours = 2;
    int clique = 3;
    std::string out_file;
    std::string map_file;
    bool symmetry = false;
};

int run_encode(const EncodeArgs& args) {
    auto gf = ramsey::read_graph_file(args.graph_file);
    auto f = ramsey::cnf::encode_arrowing(gf.graph, args.colours, args.clique, args.symmetry);

    std::string map_path = args.map_file.empty() ? args.out_file + ".map" : args.map_file;
    std::ofstream out(args.out_file);
    if (!out) throw ramsey::ParseError("cannot write: " + args.out_file);
    out << ramsey::cnf::to_dimacs(f);
    std::ofstream map(map_path);
    if (!map) throw ramsey::ParseError("cannot write: " + map_path);
    map << ramsey::cnf::var_map_text(f);
    std::cerr << "wrote " << f.num_vars << " variables, " << f.clauses.size() << " clauses to "
              << args.out_file << " (variable map: " << map_path << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for Ramsey arrowing and clique-pattern equivalence"};
    app.require_subcommand(1);

    ArrowsArgs arrows;
    auto* cmd_arrows = app.add_subcommand("arrows", "decide whether a graph arrows (K_n)_r");
    cmd_arrows->add_option("graph", arrows.graph_file, "graph file")->required();
    cmd_arrows->add_option("-r,--colours", arrows.colours, "number of colours")->required();
    cmd_arrows->add_option("-n,--clique", arrows.clique, "clique order")->required();
    cmd_arrows->add_option("--strategy", arrows.strategy,
                           "auto | backtracking | exhaustive | external");
    cmd_arrows->add_option("--budget", arrows.max_nodes, "search node budget");
    cmd_arrows->add_option("--seed", arrows.seed, "budget seed recorded in the certificate");
    cmd_arrows->add_option("--solver-result", arrows.solver_result_file,
                           "solver output file for --strategy=external");

    TheoremArgs theorem;
    auto* cmd_theorem = app.add_subcommand(
        "theorem-check", "monochromatic K_n+K_{n-1} or a K_n-free recolouring");
    cmd_theorem->add_option("graph", theorem.graph_file, "graph file (may carry the colouring)")
        ->required();
    cmd_theorem->add_option("--colouring", theorem.colouring_file,
                            "separate colouring file (same format)");
    cmd_theorem->add_option("-n,--clique", theorem.clique, "clique order")->required();
    cmd_theorem->add_option("-r,--colours", theorem.colours, "number of colours")->required();
    cmd_theorem->add_option("--budget", theorem.max_nodes, "search node budget");
    cmd_theorem->add_option("--seed", theorem.seed, "budget seed recorded in the certificate");

    std::string known_name, known_out;
    auto* cmd_known = app.add_subcommand("known", "write a built-in verified colouring");
    cmd_known->add_option("name", known_name, "c5_pair | paley17 | gf16_triple")->required();
    cmd_known->add_option("-o,--output", known_out, "output file (default: stdout)");

    std::string verify_cert, verify_graph;
    auto* cmd_verify = app.add_subcommand("verify", "replay a certificate against a graph file");
    cmd_verify->add_option("certificate", verify_cert, "certificate JSON file")->required();
    cmd_verify->add_option("graph", verify_graph, "graph file")->required();

    AvoidArgs avoid_args;
    auto* cmd_avoid = app.add_subcommand("avoid", "search for a target-free edge colouring");
    cmd_avoid->add_option("graph", avoid_args.graph_file, "graph file")->required();
    cmd_avoid->add_option("-r,--colours", avoid_args.colours, "number of colours")->required();
    cmd_avoid->add_option("--target-clique", avoid_args.target_clique, "avoid monochromatic K_n");
    cmd_avoid->add_option("--target-pair", avoid_args.target_pair,
                          "avoid monochromatic K_n+K_{n-1}");
    cmd_avoid->add_option("--budget", avoid_args.max_nodes, "search node budget");
    cmd_avoid->add_option("-o,--output", avoid_args.out_file, "output file (default: stdout)");

    EncodeArgs encode;
    auto* cmd_encode = app.add_subcommand("encode-cnf", "write the arrowing decision as DIMACS");
    cmd_encode->add_option("graph", encode.graph_file, "graph file")->required();
    cmd_encode->add_option("-r,--colours", encode.colours, "number of colours")->required();
    cmd_encode->add_option("-n,--clique", encode.clique, "clique order")->required();
    cmd_encode->add_option("-o,--output", encode.out_file, "DIMACS output file")->required();
    cmd_encode->add_option("--map", encode.map_file, "variable map file (default: <output>.map)");
    cmd_encode->add_flag("--symmetry", encode.symmetry, "add colour-precedence clauses");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_arrows->parsed()) return run_arrows(arrows);
        if (cmd_theorem->parsed()) return run_theorem_check(theorem);
        if (cmd_known->parsed()) return run_known(known_name, known_out);
        if (cmd_verify->parsed()) return run_verify(verify_cert, verify_graph);
        if (cmd_avoid->parsed()) return run_avoid(avoid_args);
        if (cmd_encode->parsed()) return run_encode(encode);
    } catch (const ramsey::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFile;
    } catch (const ramsey::RegistryError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ramsey::PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const ramsey::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
