#pragma once

#include "domset/demand.hpp"
#include "domset/graph.hpp"

namespace domset {

struct ExactResult {
    enum class Method { brute_force, branch_and_bound };

    long long optimum = 0; // best verified size found
    VertexSet witness;
    long long nodes_explored = 0;
    Method method = Method::branch_and_bound;
    bool proven_optimal = true;
};

/// Degree-based lower bound on the minimum dominating-set size:
/// ceil(n_pos * r_min / (max_degree + r_min)) with r_min the minimum
/// positive demand and n_pos the number of vertices with positive demand
/// (0 when every demand is 0). Safe to use for pruning.
long long lower_bound(const Graph& g, const DemandSpec& spec);

/// Deterministic branch and bound. Vertices whose demand exceeds their
/// degree are fixed into the set up front; branching picks the vertex
/// covering the most unmet demand, ties to the lowest id. On budget
/// exhaustion returns the best verified set with proven_optimal = false.
ExactResult exact_min_domset(const Graph& g, const DemandSpec& spec, long long node_budget);

/// Exhaustive enumeration by increasing cardinality, first verifying set
/// wins. Hard cap n <= 24.
ExactResult brute_force_min_domset(const Graph& g, const DemandSpec& spec);

} // namespace domset
