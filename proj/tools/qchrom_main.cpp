// qchrom: construct, transform, solve and verify quantum colourings of graphs.
//
// Exit codes: 0 success/pass, 1 verification failure, 2 usage error,
// 3 solver budget exhausted (inconclusive). Machine output (values, DIMACS,
// JSON) goes to standard output; human commentary goes to standard error.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qchrom/datasets.hpp"
#include "qchrom/errors.hpp"
#include "qchrom/experiments.hpp"
#include "qchrom/io.hpp"
#include "qchrom/jsoncert.hpp"
#include "qchrom/repro.hpp"
#include "qchrom/solve.hpp"
#include "qchrom/transforms.hpp"
#include "qchrom/vecrep.hpp"

namespace {

using namespace qchrom;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct GlobalOpts {
    bool json = false;
    bool timings = false;
    std::uint64_t seed = 1;
    std::uint64_t budget = kDefaultBudget;
    double tol = kCertTolerance;
};

std::uint64_t default_budget_from_env() {
    if (const char* env = std::getenv("QCHROM_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw InvalidInput("QCHROM_BUDGET is not a number: " + std::string(env));
        }
    }
    return kDefaultBudget;
}

Graph graph_from_arg(const std::string& path) {
    if (path == "-") return read_graph_auto(std::cin);
    return load_graph_file(path);
}

void emit_graph(const Graph& g, bool as_json) {
    if (as_json)
        std::cout << graph_to_json_text(g) << "\n";
    else
        write_dimacs(std::cout, g);
}

void print_report_human(const VerifyReport& report) {
    if (report.pass) {
        std::cerr << "pass (worst residual " << report.worst_residual << ")\n";
        return;
    }
    std::cerr << "FAIL (worst residual " << report.worst_residual << ", "
              << report.violations.size() << " violation(s))\n";
    std::size_t shown = 0;
    for (const Violation& v : report.violations) {
        if (++shown > 10) {
            std::cerr << "  ... " << (report.violations.size() - 10) << " more\n";
            break;
        }
        std::cerr << "  " << v.kind;
        if (v.u >= 0 && v.v >= 0)
            std::cerr << " on edge (" << v.u << "," << v.v << ")";
        else if (v.u >= 0)
            std::cerr << " at vertex " << v.u;
        if (v.colour_a >= 0) {
            std::cerr << " colour " << v.colour_a;
            if (v.colour_b >= 0 && v.colour_b != v.colour_a) std::cerr << "/" << v.colour_b;
        }
        std::cerr << ", residual " << v.residual;
        if (!v.note.empty()) std::cerr << " (" << v.note << ")";
        std::cerr << "\n";
    }
}

int finish_verify(const VerifyReport& report, const GlobalOpts& opts) {
    if (opts.json) std::cout << report_to_json_text(report) << "\n";
    print_report_human(report);
    return report.pass ? kExitPass : kExitVerifyFail;
}

// ---------------------------------------------------------------------------
// gen

struct GenOpts {
    int hadamard_n = 4;
    int roots_p = 3;
    int complete_n = 4;
    int gnp_n = 50;
    double gnp_p = 0.5;
    bool vectors = false;
};

int run_gen(const std::string& which, const GenOpts& gen, const GlobalOpts& opts) {
    if (which == "hadamard") {
        if (gen.vectors)
            std::cout << vectors_to_json_text(hadamard_pm_rep(gen.hadamard_n)) << "\n";
        else
            emit_graph(hadamard_graph(gen.hadamard_n), opts.json);
    } else if (which == "roots") {
        auto [g, rep] = roots_of_unity_graph(gen.roots_p);
        if (gen.vectors)
            std::cout << vectors_to_json_text(rep) << "\n";
        else
            emit_graph(g, opts.json);
    } else if (which == "dim4") {
        auto [g, rep] = fourth_roots_dim4_graph();
        if (gen.vectors)
            std::cout << vectors_to_json_text(rep) << "\n";
        else
            emit_graph(g, opts.json);
    } else if (which == "g18") {
        auto [g, rep] = g18_dataset();
        if (gen.vectors)
            std::cout << vectors_to_json_text(rep) << "\n";
        else
            emit_graph(g, opts.json);
    } else if (which == "complete") {
        if (gen.vectors) throw InvalidInput("complete graphs ship no vector representation");
        emit_graph(complete_graph(gen.complete_n), opts.json);
    } else {  // gnp
        if (gen.vectors) throw InvalidInput("random graphs ship no vector representation");
        emit_graph(gnp(gen.gnp_n, gen.gnp_p, opts.seed), opts.json);
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------
// solve

json witness_vertices(const std::vector<int>& w) { return json(w); }

int run_solve(const std::string& which, const std::string& path, const GlobalOpts& opts) {
    const Graph g = graph_from_arg(path);
    json out;
    out["parameter"] = which;
    SolveStatus status = SolveStatus::Exact;

    if (which == "chi") {
        const ChromaticResult r = chromatic_number(g, opts.budget);
        status = r.status;
        out["value"] = r.value;
        if (r.witness) out["witness"] = r.witness->colour;
        out["nodes"] = r.stats.nodes;
        if (opts.timings) out["ms"] = r.stats.ms;
        if (!opts.json && status == SolveStatus::Exact) std::cout << r.value << "\n";
    } else if (which == "omega" || which == "alpha") {
        const CliqueResult r =
            which == "omega" ? max_clique(g, opts.budget) : max_independent_set(g, opts.budget);
        status = r.status;
        out["value"] = r.value;
        out["witness"] = witness_vertices(r.witness);
        out["nodes"] = r.stats.nodes;
        if (opts.timings) out["ms"] = r.stats.ms;
        if (!opts.json && status == SolveStatus::Exact) std::cout << r.value << "\n";
    } else {  // bipartite
        const auto col = is_bipartite(g);
        out["value"] = static_cast<bool>(col);
        if (col) out["witness"] = col->colour;
        if (!opts.json) std::cout << (col ? "true" : "false") << "\n";
    }

    out["exact"] = status == SolveStatus::Exact;
    if (opts.json) std::cout << out.dump() << "\n";
    if (status == SolveStatus::Inconclusive) {
        std::cerr << "budget exhausted: value " << out["value"]
                  << " is only the best bound found\n";
        return kExitInconclusive;
    }
    return kExitPass;
}

// ---------------------------------------------------------------------------
// verify

int run_verify_colouring(const std::string& graph_path, const std::string& col_path,
                         const GlobalOpts& opts) {
    const Graph g = graph_from_arg(graph_path);
    const ClassicalColouring col = load_colouring_file(col_path);
    const Report report = verify_proper_colouring(g, col);
    if (opts.json) {
        json j;
        j["pass"] = report.pass;
        j["summary"] = report.summary;
        json violations = json::array();
        for (const Violation& v : report.violations) {
            json jv;
            jv["kind"] = v.kind;
            jv["u"] = v.u;
            jv["v"] = v.v;
            jv["colour_a"] = v.colour_a;
            jv["colour_b"] = v.colour_b;
            violations.push_back(std::move(jv));
        }
        j["violations"] = std::move(violations);
        std::cout << j.dump() << "\n";
    }
    std::cerr << (report.pass ? "pass" : "FAIL") << ": " << report.summary << "\n";
    return report.pass ? kExitPass : kExitVerifyFail;
}

int run_verify_cert(const std::string& kind, const std::string& path, const GlobalOpts& opts) {
    const CertBundle bundle = load_cert_file(path);
    if (bundle.kind != kind)
        throw InvalidInput("certificate file has kind '" + bundle.kind + "', expected '" + kind + "'");
    return finish_verify(verify_bundle(bundle, opts.tol), opts);
}

// ---------------------------------------------------------------------------
// construct

struct ConstructArgs {
    std::string a, b;  // positional inputs
};

int run_construct(const std::string& which, const ConstructArgs& args, const GlobalOpts&) {
    if (which == "fourier-lift" || which == "od-lift") {
        const VectorRep rep = load_vectors_file(args.a);
        const Graph g = args.b.empty() ? rep.orthogonality_graph() : graph_from_arg(args.b);
        const Rank1Cert cert =
            which == "fourier-lift" ? unit_modulus_rep_to_rank1(g, rep) : real_rep_to_rank1_od(g, rep);
        std::cout << rank1_to_json_text(g, cert) << "\n";
        std::cerr << "rank-1 certificate with " << cert.c << " colours on " << g.vertex_count()
                  << " vertices\n";
        return kExitPass;
    }
    if (which == "classical-lift") {
        const Graph g = graph_from_arg(args.a);
        const ClassicalColouring col = load_colouring_file(args.b);
        const Rank1Cert cert = classical_to_rank1(g, col);
        std::cout << rank1_to_json_text(g, cert) << "\n";
        return kExitPass;
    }
    if (which == "tensor-union") {
        CertBundle ba = load_cert_file(args.a);
        CertBundle bb = load_cert_file(args.b);
        auto as_projector = [](const CertBundle& b) {
            if (b.kind == "projector") return b.projector;
            if (b.kind == "rank1") return rank1_to_projector(b.rank1);
            throw InvalidInput("tensor union needs rank1 or projector certificates");
        };
        const ProjectorCert cert = tensor_union(ba.graph, bb.graph, as_projector(ba), as_projector(bb));
        const Graph u = union_same_vertices(ba.graph, bb.graph);
        std::cout << projector_to_json_text(u, cert) << "\n";
        return kExitPass;
    }
    if (which == "pullback") {
        const std::string hom_text = read_file(args.a);
        json hj;
        try {
            hj = json::parse(hom_text);
        } catch (const json::exception& e) {
            throw InvalidInput(std::string("homomorphism json: ") + e.what());
        }
        if (!hj.is_object() || !hj.contains("source") || !hj.contains("map"))
            throw InvalidInput("homomorphism json needs fields 'source' and 'map'");
        const CertBundle bundle = load_cert_file(args.b);
        Homomorphism hom{graph_from_json_text(hj.at("source").dump()), bundle.graph,
                         hj.at("map").get<std::vector<int>>()};
        if (bundle.kind == "rank1")
            std::cout << rank1_to_json_text(hom.source, pullback(hom, bundle.rank1)) << "\n";
        else if (bundle.kind == "projector")
            std::cout << projector_to_json_text(hom.source, pullback(hom, bundle.projector)) << "\n";
        else if (bundle.kind == "general")
            std::cout << general_to_json_text(hom.source, pullback(hom, bundle.general)) << "\n";
        else
            throw InvalidInput("pullback needs a verifiable certificate kind");
        return kExitPass;
    }
    if (which == "normal-form") {
        const CertBundle bundle = load_cert_file(args.a);
        if (bundle.kind != "general") throw InvalidInput("normal-form needs a general certificate");
        const NormalFormResult nf = normal_form(bundle.graph, bundle.general);
        if (!nf.ok) {
            std::cerr << "input certificate fails verification:\n";
            print_report_human(nf.input_report);
            return kExitVerifyFail;
        }
        std::cout << projector_to_json_text(bundle.graph, nf.cert) << "\n";
        std::cerr << "schmidt rank " << nf.schmidt_rank << ", commutation residual "
                  << nf.max_commutation_residual << ", conjugation residual "
                  << nf.max_conj_residual << (nf.equalized ? ", ranks equalized" : "") << "\n";
        return kExitPass;
    }
    if (which == "equalize") {
        const CertBundle bundle = load_cert_file(args.a);
        MixedMeasurements input;
        if (bundle.kind == "measurements") {
            input = bundle.measurements;
        } else if (bundle.kind == "projector") {
            input = MixedMeasurements{bundle.projector.c, bundle.projector.d,
                                      bundle.projector.projectors};
        } else {
            throw InvalidInput("equalize needs a projector certificate or a measurements file");
        }
        const ProjectorCert cert = equalize_ranks(bundle.graph, input);
        std::cout << projector_to_json_text(bundle.graph, cert) << "\n";
        return kExitPass;
    }
    if (which == "extract3") {
        const CertBundle bundle = load_cert_file(args.a);
        if (bundle.kind != "rank1") throw InvalidInput("extract3 needs a rank-1 certificate");
        const ClassicalColouring col = extract_classical_3col(bundle.graph, bundle.rank1);
        std::cout << colouring_to_json_text(col) << "\n";
        return kExitPass;
    }
    throw InvalidInput("unknown construct operation: " + which);
}

// ---------------------------------------------------------------------------
// repro / experiment

int run_repro(const GlobalOpts& opts) {
    const std::vector<ReproOutcome> outcomes = repro_all(opts.budget);
    if (opts.json) std::cout << repro_to_json_text(outcomes, opts.timings) << "\n";
    bool any_fail = false, any_inconclusive = false;
    for (const ReproOutcome& o : outcomes) {
        std::cerr << (o.pass ? "[PASS] " : o.inconclusive ? "[????] " : "[FAIL] ") << o.item
                  << ": " << o.computed;
        if (!o.pass) std::cerr << " (expected " << o.expected << ")";
        if (opts.timings) std::cerr << " [" << o.elapsed_ms << " ms]";
        std::cerr << "\n       " << o.claim << "\n";
        any_fail |= !o.pass;
        any_inconclusive |= o.inconclusive;
    }
    std::cerr << (any_fail ? "repro: FAIL\n" : "repro: all items pass\n");
    if (any_inconclusive) return kExitInconclusive;
    return any_fail ? kExitVerifyFail : kExitPass;
}

struct ExperimentOpts {
    std::vector<int> ns;
    double p = 0.5;
    int trials = 20;
    double epsilon = 0.5;
    int chi_cap = 60;
};

int run_experiment_gnp(const ExperimentOpts& eo, const GlobalOpts& opts) {
    GnpParams params;
    params.ns = eo.ns.empty() ? std::vector<int>{50} : eo.ns;
    params.p = eo.p;
    params.trials = eo.trials;
    params.seed = opts.seed;
    params.epsilon = eo.epsilon;
    params.chi_cap = eo.chi_cap;
    params.budget = opts.budget;
    const GnpResult result = run_gnp_experiment(params);
    std::cout << gnp_result_to_json_text(result, opts.timings) << "\n";
    std::cerr << result.summary.total << " trial(s): " << result.summary.violations
              << " clique-bound violation(s), " << result.summary.inconclusive
              << " inconclusive; violation fraction " << result.summary.violation_fraction << "\n";
    return result.summary.inconclusive > 0 ? kExitInconclusive : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    GlobalOpts opts;
    try {
        opts.budget = default_budget_from_env();
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    CLI::App app{"quantum graph colouring toolkit"};
    app.fallthrough();
    app.add_flag("--json", opts.json, "machine-readable JSON on standard output");
    app.add_flag("--timings", opts.timings, "include elapsed-time fields (non-canonical)");
    app.add_option("--seed", opts.seed, "PRNG seed for random generation");
    app.add_option("--budget", opts.budget, "solver node budget (env QCHROM_BUDGET overrides the default)");
    app.add_option("--tol", opts.tol, "verification tolerance");
    app.require_subcommand(1);

    auto sub = [](CLI::App* parent, const std::string& name, const std::string& desc) {
        CLI::App* s = parent->add_subcommand(name, desc);
        s->fallthrough();
        return s;
    };

    // gen
    GenOpts gen_opts;
    CLI::App* gen = sub(&app, "gen", "emit a built-in graph (DIMACS, or JSON with --json)");
    gen->require_subcommand(1);
    CLI::App* gen_had = sub(gen, "hadamard", "n-bit strings, edges at Hamming distance n/2");
    gen_had->add_option("-n,--n", gen_opts.hadamard_n, "bit count (even)");
    CLI::App* gen_roots = sub(gen, "roots", "orthogonality graph of all p-th root-of-unity vectors");
    gen_roots->add_option("-p,--prime", gen_opts.roots_p, "prime p (2, 3 or 5)");
    CLI::App* gen_dim4 = sub(gen, "dim4", "the 64-vertex fourth-roots orthogonality graph");
    CLI::App* gen_g18 = sub(gen, "g18", "the 18-vertex, 44-edge example with its R^4 vectors");
    CLI::App* gen_complete = sub(gen, "complete", "complete graph K_n");
    gen_complete->add_option("-n,--n", gen_opts.complete_n, "vertex count");
    CLI::App* gen_gnp = sub(gen, "gnp", "G(n,p) with the documented splitmix64 stream");
    gen_gnp->add_option("-n,--n", gen_opts.gnp_n, "vertex count");
    gen_gnp->add_option("-p,--prob", gen_opts.gnp_p, "edge probability");
    for (CLI::App* s : {gen_had, gen_roots, gen_dim4, gen_g18})
        s->add_flag("--vectors", gen_opts.vectors, "emit the vector representation instead");

    // solve
    CLI::App* solve = sub(&app, "solve", "exact graph parameters");
    solve->require_subcommand(1);
    std::string solve_path = "-";
    for (const char* name : {"chi", "omega", "alpha", "bipartite"})
        sub(solve, name, "")->add_option("graph", solve_path, "graph file (DIMACS or JSON), - for stdin");

    // verify
    CLI::App* verify = sub(&app, "verify", "check colourings and certificates");
    verify->require_subcommand(1);
    std::string verify_a, verify_b;
    CLI::App* verify_col = sub(verify, "colouring", "proper colouring of a graph");
    verify_col->add_option("graph", verify_a, "graph file")->required();
    verify_col->add_option("colouring", verify_b, "colouring JSON file")->required();
    for (const char* name : {"rank1", "projector", "general"})
        sub(verify, name, "")->add_option("cert", verify_a, "certificate JSON file")->required();

    // construct
    CLI::App* construct = sub(&app, "construct", "build and transform certificates");
    construct->require_subcommand(1);
    ConstructArgs cargs;
    {
        CLI::App* s = sub(construct, "fourier-lift", "rank-1 certificate from a constant-modulus representation");
        s->add_option("vectors", cargs.a, "vector JSON file")->required();
        s->add_option("graph", cargs.b, "graph file (default: the rep's orthogonality graph)");
        s = sub(construct, "od-lift", "rank-1 certificate from a real representation via orthogonal designs");
        s->add_option("vectors", cargs.a, "vector JSON file")->required();
        s->add_option("graph", cargs.b, "graph file (default: the rep's orthogonality graph)");
        s = sub(construct, "classical-lift", "rank-1 certificate from a proper colouring");
        s->add_option("graph", cargs.a, "graph file")->required();
        s->add_option("colouring", cargs.b, "colouring JSON file")->required();
        s = sub(construct, "tensor-union", "tensor two certificates on one vertex set");
        s->add_option("certA", cargs.a, "certificate JSON file")->required();
        s->add_option("certB", cargs.b, "certificate JSON file")->required();
        s = sub(construct, "pullback", "pull a certificate back along a homomorphism");
        s->add_option("hom", cargs.a, "homomorphism JSON file {source, map}")->required();
        s->add_option("cert", cargs.b, "certificate JSON file for the target")->required();
        s = sub(construct, "normal-form", "projector normal form of a general certificate");
        s->add_option("cert", cargs.a, "general certificate JSON file")->required();
        s = sub(construct, "equalize", "equalize projector ranks");
        s->add_option("cert", cargs.a, "projector certificate or measurements JSON file")->required();
        s = sub(construct, "extract3", "classical 3-colouring from a 3-colour rank-1 certificate");
        s->add_option("cert", cargs.a, "rank-1 certificate JSON file")->required();
    }

    // repro / experiment
    sub(&app, "repro", "reproduce every built-in published value");
    CLI::App* experiment = sub(&app, "experiment", "randomized experiment harnesses");
    experiment->require_subcommand(1);
    ExperimentOpts eo;
    CLI::App* exp_gnp = sub(experiment, "gnp", "exact clique numbers of G(n,p) against the 2 ln n / ln(1/p) bound");
    exp_gnp->add_option("-n,--n", eo.ns, "vertex count(s), repeatable");
    exp_gnp->add_option("-p,--prob", eo.p, "edge probability");
    exp_gnp->add_option("--trials", eo.trials, "trials per n");
    exp_gnp->add_option("--epsilon", eo.epsilon, "slack factor in the bound check");
    exp_gnp->add_option("--chi-cap", eo.chi_cap, "compute chi only for n at or below this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) {
            for (const char* name : {"hadamard", "roots", "dim4", "g18", "complete", "gnp"})
                if (gen->get_subcommand(name)->parsed()) return run_gen(name, gen_opts, opts);
        }
        if (solve->parsed()) {
            for (const char* name : {"chi", "omega", "alpha", "bipartite"})
                if (solve->get_subcommand(name)->parsed()) return run_solve(name, solve_path, opts);
        }
        if (verify->parsed()) {
            if (verify_col->parsed()) return run_verify_colouring(verify_a, verify_b, opts);
            for (const char* name : {"rank1", "projector", "general"})
                if (verify->get_subcommand(name)->parsed()) return run_verify_cert(name, verify_a, opts);
        }
        if (construct->parsed()) {
            for (const char* name : {"fourier-lift", "od-lift", "classical-lift", "tensor-union",
                                     "pullback", "normal-form", "equalize", "extract3"})
                if (construct->get_subcommand(name)->parsed())
                    return run_construct(name, cargs, opts);
        }
        if (app.get_subcommand("repro")->parsed()) return run_repro(opts);
        if (experiment->parsed() && exp_gnp->parsed()) return run_experiment_gnp(eo, opts);
        std::cerr << "error: no subcommand\n";
        return kExitUsage;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const VerificationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
