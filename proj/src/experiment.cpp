#include "domset/approx.hpp"
#include "domset/errors.hpp"
#include "domset/exact.hpp"
#include "domset/report.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <ostream>
#include <sstream>

namespace domset {

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

Graph generate_instance(const ExperimentConfig& cfg, std::uint64_t seed) {
    if (cfg.generator_kind == "regular") return random_regular(cfg.n, cfg.d, seed);
    if (cfg.generator_kind == "gnp") return random_graph(cfg.n, cfg.p.num, cfg.p.den, seed);
    if (cfg.generator_kind == "bipartite")
        return random_bipartite(cfg.n1, cfg.n2, cfg.p.num, cfg.p.den, seed);
    if (cfg.generator_kind == "line_regular")
        return line_graph(random_regular(cfg.n, cfg.d, seed));
    throw ParseError("unknown generator kind: " + cfg.generator_kind);
}

struct SolverSpec {
    std::string id; // exact | greedy | claw
    int p = 0;      // claw only
};

SolverSpec parse_solver(const std::string& token) {
    if (token == "exact") return {"exact", 0};
    if (token == "greedy") return {"greedy", 0};
    if (token.rfind("claw:", 0) == 0) {
        SolverSpec s{"claw", 0};
        s.p = static_cast<int>(std::stoll(token.substr(5)));
        if (s.p < 2) throw ParseError("claw solver needs p >= 2: " + token);
        return s;
    }
    throw ParseError("unknown solver: " + token);
}

} // namespace

int run_experiment(const ExperimentConfig& cfg, std::ostream& csv, std::ostream& log) {
    std::vector<SolverSpec> solvers;
    bool have_exact = false;
    for (const auto& tok : cfg.solvers) {
        solvers.push_back(parse_solver(tok));
        if (solvers.back().id == "exact") have_exact = true;
    }
    if (!have_exact && cfg.require_exact)
        throw ParseError("require_exact needs the exact solver in the solver list");
    std::vector<DemandSpec> specs;
    for (const auto& t : cfg.spec_texts) specs.push_back(DemandSpec::parse(t));

    csv << SolveReport::csv_header() << "\n";
    std::map<std::string, double> max_ratio;
    bool bound_violated = false;
    bool budget_exhausted = false;

    for (int i = 0; i < cfg.count; ++i) {
        const std::uint64_t seed_i = cfg.seed + static_cast<std::uint64_t>(i);
        Graph g = generate_instance(cfg, seed_i);
        std::ostringstream label;
        label << cfg.generator_kind << "-i" << i;

        for (size_t si = 0; si < specs.size(); ++si) {
            const DemandSpec& spec = specs[si];

            std::optional<long long> optimum;
            std::vector<SolveReport> rows;
            for (const SolverSpec& sv : solvers) {
                SolveReport r;
                r.instance = label.str();
                r.n = g.n;
                r.m = g.m;
                r.max_deg = g.max_degree();
                r.min_deg = g.min_degree();
                r.spec_text = cfg.spec_texts[si];
                r.solver = sv.id;
                r.seed = seed_i;

                auto t0 = std::chrono::steady_clock::now();
                if (sv.id == "exact") {
                    ExactResult ex = exact_min_domset(g, spec, cfg.budget);
                    r.size = ex.optimum;
                    if (ex.proven_optimal) {
                        optimum = ex.optimum;
                        r.optimum = ex.optimum;
                        r.ratio = 1.0;
                    } else if (cfg.require_exact) {
                        log << "budget exhausted on " << r.instance << " spec " << r.spec_text
                            << "\n";
                        budget_exhausted = true;
                    }
                } else if (sv.id == "greedy") {
                    ApproxResult ap = greedy_domset(g, spec);
                    r.size = ap.witness.size();
                    r.certified_bound = ap.claimed_bound;
                } else { // claw
                    ApproxResult ap;
                    if (spec.kind == DemandSpec::Kind::kdom)
                        ap = approx_k_dom_claw(g, spec.k, sv.p);
                    else if (spec.kind == DemandSpec::Kind::alpha)
                        ap = approx_alpha_dom_claw(g, spec.alpha, sv.p);
                    else
                        throw PreconditionError("claw solver needs a k= or alpha= spec");
                    r.size = ap.witness.size();
                    r.certified_bound = ap.claimed_bound;
                    r.escalated = ap.escalated;
                }
                r.wall_ms = elapsed_ms(t0);
                rows.push_back(std::move(r));
            }

            for (auto& r : rows) {
                if (optimum && *optimum > 0 && r.solver != "exact") {
                    r.optimum = optimum;
                    r.ratio = static_cast<double>(r.size) / static_cast<double>(*optimum);
                }
                if (r.ratio) {
                    auto it = max_ratio.find(r.solver);
                    if (it == max_ratio.end() || *r.ratio > it->second)
                        max_ratio[r.solver] = *r.ratio;
                }
                if (r.ratio && r.certified_bound && *r.ratio > *r.certified_bound + 1e-9) {
                    bound_violated = true;
                    log << "bound violation on " << r.instance << " spec " << r.spec_text
                        << " solver " << r.solver << ": ratio " << format_double(*r.ratio)
                        << " > bound " << format_double(*r.certified_bound) << "\n";
                }
                csv << r.csv_row() << "\n";
            }
        }
    }

    for (const auto& [solver, ratio] : max_ratio)
        csv << "# max_ratio " << solver << "=" << format_double(ratio) << "\n";

    if (bound_violated) return 4;
    if (budget_exhausted) return 3;
    return 0;
}

} // namespace domset
