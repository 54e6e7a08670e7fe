// domset: generalized graph domination workbench.
// Exit codes: 0 ok, 1 usage/parse, 2 precondition, 3 budget, 4 invariant/bound violation.

#include "domset/approx.hpp"
#include "domset/demand.hpp"
#include "domset/errors.hpp"
#include "domset/exact.hpp"
#include "domset/graph.hpp"
#include "domset/reductions.hpp"
#include "domset/report.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace domset;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitBudget = 3;
constexpr int kExitViolation = 4;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& contents) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write file: " + path);
    out << contents;
}

void emit_graph(const Graph& g, const std::string& out_path) {
    if (out_path.empty())
        std::cout << write_edge_list(g);
    else
        spill(out_path, write_edge_list(g));
}

VertexSet read_witness_file(const std::string& path, int universe) {
    std::istringstream in(slurp(path));
    std::vector<Vertex> ids;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        long long v;
        if (!(ls >> v)) {
            std::string junk;
            std::istringstream ls2(line);
            if (ls2 >> junk) throw ParseError("bad witness line: " + line);
            continue;
        }
        std::string rest;
        if (ls >> rest) throw ParseError("bad witness line: " + line);
        ids.push_back(static_cast<Vertex>(v));
    }
    try {
        return VertexSet::of(universe, std::move(ids));
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
}

std::string witness_text(const VertexSet& s) {
    std::ostringstream out;
    for (Vertex v : s.members) out << v << "\n";
    return out.str();
}

struct GenArgs {
    std::string kind;
    int n = 0, d = 0, n1 = 0, n2 = 0, leaves = 0, a = 0, b = 0;
    std::string p_text = "1/2";
    std::uint64_t seed = 0;
    std::string input, out;
};

int cmd_gen(const GenArgs& args) {
    Graph g;
    if (args.kind == "regular") {
        g = random_regular(args.n, args.d, args.seed);
    } else if (args.kind == "gnp") {
        Rational p = Rational::parse(args.p_text);
        g = random_graph(args.n, p.num, p.den, args.seed);
    } else if (args.kind == "bipartite") {
        Rational p = Rational::parse(args.p_text);
        g = random_bipartite(args.n1, args.n2, p.num, p.den, args.seed);
    } else if (args.kind == "complete") {
        g = complete_graph(args.n);
    } else if (args.kind == "complete-bipartite") {
        g = complete_bipartite(args.a, args.b);
    } else if (args.kind == "cycle") {
        g = cycle_graph(args.n);
    } else if (args.kind == "star") {
        g = star_graph(args.leaves);
    } else if (args.kind == "line") {
        if (args.input.empty()) throw ParseError("gen line needs --input");
        g = line_graph(read_edge_list(slurp(args.input)));
    } else {
        throw ParseError("unknown generator kind: " + args.kind);
    }
    emit_graph(g, args.out);
    return kExitOk;
}

int cmd_solve(const std::string& graph_path, const std::string& spec_text,
              const std::string& solver, int p, long long budget,
              const std::string& witness_path, std::uint64_t seed) {
    Graph g = read_edge_list(slurp(graph_path));
    DemandSpec spec = DemandSpec::parse(spec_text);

    SolveReport r;
    r.instance = graph_path;
    r.n = g.n;
    r.m = g.m;
    r.max_deg = g.max_degree();
    r.min_deg = g.min_degree();
    r.spec_text = spec_text;
    r.solver = solver;
    r.seed = seed;

    int exit_code = kExitOk;
    VertexSet witness = VertexSet::empty(g.n);
    auto t0 = std::chrono::steady_clock::now();
    if (solver == "exact") {
        ExactResult ex = exact_min_domset(g, spec, budget);
        witness = ex.witness;
        r.size = ex.optimum;
        if (ex.proven_optimal) {
            r.optimum = ex.optimum;
            r.ratio = 1.0;
        } else {
            exit_code = kExitBudget;
        }
    } else if (solver == "greedy") {
        ApproxResult ap = greedy_domset(g, spec);
        witness = ap.witness;
        r.size = ap.witness.size();
        r.certified_bound = ap.claimed_bound;
    } else if (solver == "claw") {
        if (p < 2) throw ParseError("claw solver needs --p <int >= 2>");
        ApproxResult ap;
        if (spec.kind == DemandSpec::Kind::kdom)
            ap = approx_k_dom_claw(g, spec.k, p);
        else if (spec.kind == DemandSpec::Kind::alpha)
            ap = approx_alpha_dom_claw(g, spec.alpha, p);
        else
            throw PreconditionError("claw solver needs a k= or alpha= spec");
        witness = ap.witness;
        r.size = ap.witness.size();
        r.certified_bound = ap.claimed_bound;
        r.escalated = ap.escalated;
    } else {
        throw ParseError("unknown solver: " + solver);
    }
    r.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    std::cout << r.to_json() << "\n";
    if (!witness_path.empty()) spill(witness_path, witness_text(witness));
    return exit_code;
}

int cmd_verify(const std::string& graph_path, const std::string& spec_text,
               const std::string& set_path) {
    Graph g = read_edge_list(slurp(graph_path));
    DemandSpec spec = DemandSpec::parse(spec_text);
    VertexSet d = read_witness_file(set_path, g.n);
    auto shortfall = deficiency(g, d, spec);
    if (shortfall.empty()) {
        std::cout << "ok: set of size " << d.size() << " satisfies " << spec_text << "\n";
        return kExitOk;
    }
    std::cout << "deficient vertices (" << shortfall.size() << "):\n";
    for (const auto& [v, need] : shortfall) std::cout << v << " " << need << "\n";
    return kExitViolation;
}

int cmd_reduce(const std::string& kind, const std::string& graph_path, long long k,
               const std::string& alpha_text, const std::string& f_text, long long x, long long y,
               const std::string& out_path, const std::string& meta_path, bool check,
               long long budget) {
    Graph g = read_edge_list(slurp(graph_path));
    GadgetReduction red;
    if (kind == "pendant") {
        red = reduce_pendant_kdom(g, k);
    } else if (kind == "bipartite-k") {
        red = reduce_bipartite_kdom(g, k);
    } else if (kind == "alpha") {
        red = reduce_alpha_bipartite(g, Rational::parse(alpha_text));
    } else if (kind == "fdm") {
        red = reduce_fdm(g, FFunctionSpec::parse(f_text), x, y);
    } else {
        throw ParseError("unknown reduction kind: " + kind);
    }
    emit_graph(red.gadget, out_path);
    std::string meta = meta_path;
    if (meta.empty() && !out_path.empty()) meta = out_path + ".meta";
    if (!meta.empty()) spill(meta, write_reduction_meta(red));
    if (check) {
        ReductionCheck chk = check_reduction(red, budget);
        std::cout << "relation: " << chk.relation << "\n";
        std::cout << "holds: " << (chk.holds ? "yes" : "no") << "\n";
        if (!chk.holds) return kExitViolation;
    }
    return kExitOk;
}

int cmd_experiment(const std::string& config_path) {
    ExperimentConfig cfg = ExperimentConfig::parse(slurp(config_path));
    if (const char* env = std::getenv("DOMSET_SEED")) {
        try {
            cfg.seed = static_cast<std::uint64_t>(std::stoull(env));
        } catch (const std::exception&) {
            throw ParseError("bad DOMSET_SEED value");
        }
    }
    if (cfg.out_path.empty()) throw ParseError("config is missing out=<path>");
    std::ofstream csv(cfg.out_path);
    if (!csv) throw ParseError("cannot write report: " + cfg.out_path);
    int code = run_experiment(cfg, csv, std::cerr);
    std::cout << "report written to " << cfg.out_path << "\n";
    return code;
}

int cmd_find_xy(const std::string& f_text, long long bound) {
    FFunctionSpec f = FFunctionSpec::parse(f_text);
    for (auto [x, y] : find_xy(f, bound)) std::cout << x << " " << y << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized graph domination workbench"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* sc_gen = app.add_subcommand("gen", "generate a graph file");
    sc_gen->add_option("kind", gen.kind,
                       "regular|gnp|bipartite|complete|complete-bipartite|cycle|star|line")
        ->required();
    sc_gen->add_option("--n", gen.n, "vertex count");
    sc_gen->add_option("--d", gen.d, "degree (regular)");
    sc_gen->add_option("--n1", gen.n1, "first part size (bipartite)");
    sc_gen->add_option("--n2", gen.n2, "second part size (bipartite)");
    sc_gen->add_option("--a", gen.a, "first part size (complete-bipartite)");
    sc_gen->add_option("--b", gen.b, "second part size (complete-bipartite)");
    sc_gen->add_option("--leaves", gen.leaves, "leaf count (star)");
    sc_gen->add_option("--p", gen.p_text, "edge probability as a rational, e.g. 1/2");
    sc_gen->add_option("--seed", gen.seed, "generator seed");
    sc_gen->add_option("--input", gen.input, "input graph (line)");
    sc_gen->add_option("--out", gen.out, "output path (stdout when omitted)");

    std::string solve_graph, solve_spec, solve_solver = "exact", solve_witness;
    int solve_p = 0;
    long long solve_budget = 10'000'000;
    std::uint64_t solve_seed = 0;
    auto* sc_solve = app.add_subcommand("solve", "solve one instance, print a JSON report row");
    sc_solve->add_option("graph", solve_graph, "edge-list file")->required();
    sc_solve->add_option("--spec", solve_spec, "demand spec, e.g. k=2, alpha=1/2, f=half")
        ->required();
    sc_solve->add_option("--solver", solve_solver, "exact|greedy|claw");
    sc_solve->add_option("--p", solve_p, "claw bound parameter (claw solver)");
    sc_solve->add_option("--budget", solve_budget, "node budget for the exact solver");
    sc_solve->add_option("--witness", solve_witness, "write the solution set here");
    sc_solve->add_option("--seed", solve_seed, "seed recorded in the report");

    std::string verify_graph, verify_spec, verify_set;
    auto* sc_verify = app.add_subcommand("verify", "check a vertex set against a demand spec");
    sc_verify->add_option("graph", verify_graph, "edge-list file")->required();
    sc_verify->add_option("--spec", verify_spec, "demand spec")->required();
    sc_verify->add_option("--set", verify_set, "witness file, one vertex id per line")->required();

    std::string red_kind, red_graph, red_alpha = "1/2", red_f = "half", red_out, red_meta;
    long long red_k = 2, red_x = 1, red_y = 2, red_budget = 10'000'000;
    bool red_check = false;
    auto* sc_reduce = app.add_subcommand("reduce", "emit a hardness gadget for a source graph");
    sc_reduce->add_option("kind", red_kind, "pendant|bipartite-k|alpha|fdm")->required();
    sc_reduce->add_option("graph", red_graph, "source edge-list file")->required();
    sc_reduce->add_option("--k", red_k, "k (pendant, bipartite-k)");
    sc_reduce->add_option("--alpha", red_alpha, "alpha as a rational (alpha)");
    sc_reduce->add_option("--f", red_f, "demand function id (fdm)");
    sc_reduce->add_option("--x", red_x, "x parameter (fdm)");
    sc_reduce->add_option("--y", red_y, "y parameter (fdm)");
    sc_reduce->add_option("--out", red_out, "gadget output path (stdout when omitted)");
    sc_reduce->add_option("--meta", red_meta, "metadata path (default <out>.meta)");
    sc_reduce->add_flag("--check", red_check, "solve both sides and verify the optimum relation");
    sc_reduce->add_option("--budget", red_budget, "node budget for --check");

    std::string exp_config;
    auto* sc_exp = app.add_subcommand("experiment", "run a batch study from a config file");
    sc_exp->add_option("config", exp_config, "key=value config file")->required();

    std::string fx_f;
    long long fx_bound = 50;
    auto* sc_fx = app.add_subcommand("find-xy", "search hardness parameters for an f function");
    sc_fx->add_option("f", fx_f, "function id")->required();
    sc_fx->add_option("bound", fx_bound, "search bound (default 50)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (sc_gen->parsed()) return cmd_gen(gen);
        if (sc_solve->parsed())
            return cmd_solve(solve_graph, solve_spec, solve_solver, solve_p, solve_budget,
                             solve_witness, solve_seed);
        if (sc_verify->parsed()) return cmd_verify(verify_graph, verify_spec, verify_set);
        if (sc_reduce->parsed())
            return cmd_reduce(red_kind, red_graph, red_k, red_alpha, red_f, red_x, red_y, red_out,
                              red_meta, red_check, red_budget);
        if (sc_exp->parsed()) return cmd_experiment(exp_config);
        if (sc_fx->parsed()) return cmd_find_xy(fx_f, fx_bound);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const InvariantError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitViolation;
    }
    return kExitUsage;
}
