#pragma once

#include "domset/demand.hpp"
#include "domset/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace domset {

/// One solver run on one instance. `ratio` and `certified_bound` are only
/// present when they apply; ratio <= certified bound is enforced by the
/// experiment runner.
struct SolveReport {
    std::string instance;
    int n = 0;
    long long m = 0;
    int max_deg = 0;
    int min_deg = 0;
    std::string spec_text;
    std::string solver;
    long long size = 0;
    std::optional<long long> optimum;
    std::optional<double> ratio;
    std::optional<double> certified_bound;
    bool escalated = false;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;

    std::string to_json() const;
    static std::string csv_header(bool include_timing = true);
    std::string csv_row(bool include_timing = true) const;
};

/// Deterministic float rendering used in reports ("%.9g").
std::string format_double(double v);

struct ExperimentConfig {
    std::string generator_kind; // regular | gnp | bipartite | line_regular
    int n = 0, d = 0;           // regular / line_regular
    int n1 = 0, n2 = 0;         // bipartite
    Rational p{1, 2};           // gnp / bipartite
    int count = 1;
    std::uint64_t seed = 0;
    std::vector<std::string> spec_texts;
    std::vector<std::string> solvers; // exact | greedy | claw:<p>
    long long budget = 2'000'000;
    bool require_exact = false;
    std::string out_path;

    /// Plain key=value file; '#' starts a comment. `specs` and `solvers`
    /// are ';'-separated lists. A DOMSET_SEED environment variable
    /// overrides the configured seed.
    static ExperimentConfig parse(const std::string& text);
};

/// Runs the configured batch, writes CSV rows in deterministic instance
/// order plus a max-ratio footer per solver. Returns the process exit
/// code: 0 ok, 3 budget exhausted where an optimum was required,
/// 4 certified-bound violation.
int run_experiment(const ExperimentConfig& cfg, std::ostream& csv, std::ostream& log);

} // namespace domset
