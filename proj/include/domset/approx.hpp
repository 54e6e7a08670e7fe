#pragma once

#include "domset/demand.hpp"
#include "domset/graph.hpp"

#include <vector>

namespace domset {

enum class MisOrder { ascending_id, max_degree_first };

/// Greedy maximal independent set of the subgraph induced on the
/// complement of `excluded`. Every surviving vertex ends up in the result
/// or adjacent to a member of it.
VertexSet mis_in(const Graph& g, const VertexSet& excluded, MisOrder order = MisOrder::ascending_id);

struct ApproxResult {
    VertexSet witness;
    double claimed_bound = 0.0;      // ratio guarantee for this run
    std::vector<VertexSet> layers;   // MIS layers, empty for greedy
    bool escalated = false;          // alpha claw: extra layers were needed
};

/// Greedy multicover: repeatedly add the vertex with the largest covering
/// weight (its own residual demand plus the number of neighbors with
/// positive residual demand), ties to the lowest id. Vertices whose demand
/// exceeds their degree are added first. Bound: ln(2*max_degree) + 1.
ApproxResult greedy_domset(const Graph& g, const DemandSpec& spec);

/// Union of k successive MIS layers; every vertex left outside has one
/// neighbor per layer. Bound: max{p-1, k}. When p <= cap the claw-freeness
/// claim is verified and a false claim is an error.
ApproxResult approx_k_dom_claw(const Graph& g, long long k, int p,
                               MisOrder order = MisOrder::ascending_id);

/// Runs the layer algorithm with k = ceil(alpha * min_degree), then
/// verifies under alpha-domination and adds further layers until the
/// verifier passes (at most ceil(alpha * max_degree) layers in total).
/// The escalated flag records whether extra layers were needed.
ApproxResult approx_alpha_dom_claw(const Graph& g, Rational alpha, int p,
                                   MisOrder order = MisOrder::ascending_id);

} // namespace domset
