#pragma once

#include "domset/demand.hpp"
#include "domset/graph.hpp"

#include <string>
#include <vector>

namespace domset {

/// A gadget instance built from a source graph. Source vertices keep ids
/// 0..n-1 inside the gadget; added groups occupy the ids after them.
struct GadgetReduction {
    enum class Kind { pendant_kdom, bipartite_kdom, alpha_bipartite, fdm };

    Kind kind;
    Graph source;
    Graph gadget;

    long long k = 0;     // pendant_kdom, bipartite_kdom
    Rational alpha{0, 1}; // alpha_bipartite
    long long cap_n = 0; // alpha_bipartite: N = ceil(alpha/(1-alpha))
    long long x = 0, y = 0;
    FFunctionSpec f; // fdm

    std::vector<std::vector<Vertex>> pendant_sets; // S_v per source vertex
    std::vector<Vertex> k1, k2;                    // independent attachment sets
    std::vector<Vertex> w, u;                      // clique W and its subset U

    /// Demand rule the gadget is meant to be solved under.
    DemandSpec gadget_spec() const;
    std::string kind_name() const;
};

/// Attach k-1 pendant neighbors to every source vertex. Keeps the
/// k-domination optimum at gamma(source) + (k-1)*n. Warns (does not fail)
/// when the source max degree exceeds 3.
GadgetReduction reduce_pendant_kdom(const Graph& g, long long k);

/// S dominating in the source -> S plus all pendants, k-dominating in the
/// gadget. Verified, not assumed.
VertexSet pendant_forward(const VertexSet& s, const GadgetReduction& red);

/// D_k k-dominating in the gadget -> its source part, dominating in the
/// source, of size |D_k| - (k-1)*n.
VertexSet pendant_backward(const VertexSet& d_k, const GadgetReduction& red);

/// Add independent sets K1 (joined to part V1) and K2 (joined to part V2),
/// each of size k-1. The gadget stays bipartite with parts V1+K2 / V2+K1,
/// and gamma_k(gadget) <= gamma(source) + 2k - 2.
GadgetReduction reduce_bipartite_kdom(const Graph& g, long long k);

/// Attachment sets of size N*max_degree each; every source vertex v of
/// degree >= 2 gets joined to the first ceil((alpha*d - 1)/(1 - alpha))
/// vertices of the opposite K set, degree-1 vertices to none. Sandwich:
/// gamma(source) <= gamma_alpha(gadget) <= gamma(source) + 2*N*max_degree.
GadgetReduction reduce_alpha_bipartite(const Graph& g, Rational alpha);

/// 3-regular source + clique W on y+1 vertices, the first x of which (U)
/// are joined to every source vertex. (x,y) must satisfy
/// x = ceil(f(y)) < y and x+1 = ceil(f(x+3)).
GadgetReduction reduce_fdm(const Graph& g, const FFunctionSpec& f, long long x, long long y);

/// S dominating in the source -> S + U, f-dominating in the gadget.
VertexSet fdm_forward(const VertexSet& s, const GadgetReduction& red);

/// D f-dominating in the gadget -> a dominating set of the source of size
/// <= |D| - x. Applies the swap repair when all of W-U sits inside D.
VertexSet fdm_backward(const VertexSet& d, const GadgetReduction& red);

struct ReductionCheck {
    long long source_opt = 0;
    long long gadget_opt = 0;
    bool holds = false;
    std::string relation; // verified relation, human readable
    long long nodes_source = 0;
    long long nodes_gadget = 0;
};

/// Solves both sides exactly and checks the construction's optimum
/// relation (equality for pendant and fdm, upper bound for bipartite,
/// sandwich for alpha). Throws BudgetError when a solve cannot finish.
ReductionCheck check_reduction(const GadgetReduction& red, long long oracle_budget);

/// key=value side-car describing the construction, params and group ranges.
std::string write_reduction_meta(const GadgetReduction& red);

} // namespace domset
