#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace domset {

using Vertex = int;

/// Simple undirected graph on vertices 0..n-1. Neighbor lists are kept
/// sorted ascending and symmetric; no self-loops, no parallel edges.
/// Treated as immutable once built.
struct Graph {
    int n = 0;
    long long m = 0;
    std::vector<std::vector<Vertex>> adj;

    /// Set when the graph carries a declared bipartition: parts are
    /// {0..bipartite_split-1} and {bipartite_split..n-1}.
    std::optional<int> bipartite_split;

    int degree(Vertex v) const;
    int max_degree() const;
    int min_degree() const;
    bool adjacent(Vertex u, Vertex v) const;

    /// All edges as (u,v) with u < v, sorted.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    bool operator==(const Graph& other) const {
        return n == other.n && adj == other.adj && bipartite_split == other.bipartite_split;
    }
};

/// Candidate vertex set over a graph of `universe` vertices.
/// Members are sorted and unique.
struct VertexSet {
    int universe = 0;
    std::vector<Vertex> members;

    static VertexSet empty(int universe) { return VertexSet{universe, {}}; }
    static VertexSet all(int universe);

    /// Validates ids (< universe, no duplicates), sorts, throws PreconditionError.
    static VertexSet of(int universe, std::vector<Vertex> ids);

    bool contains(Vertex v) const;
    int size() const { return static_cast<int>(members.size()); }

    /// Characteristic vector over the universe.
    std::vector<char> mask() const;

    bool operator==(const VertexSet& other) const {
        return universe == other.universe && members == other.members;
    }
};

// -- construction ------------------------------------------------------

/// Build from an explicit edge list. Rejects self-loops, duplicate edges
/// and out-of-range endpoints (PreconditionError).
Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list);

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b); // declares the bipartition
Graph cycle_graph(int n);               // n >= 3
Graph star_graph(int leaves);           // center 0, leaves 1..leaves

/// Line graph: one vertex per edge of h (edges in sorted (u,v) order),
/// adjacent iff the edges share an endpoint. h must have at least one edge.
Graph line_graph(const Graph& h);

// -- random generators (deterministic per seed) -------------------------

/// Pairing-model d-regular graph; rejects pairings with loops or
/// multi-edges and retries, up to 1000 attempts (BudgetError after that).
/// Requires n*d even and d < n.
Graph random_regular(int n, int d, std::uint64_t seed);

/// G(n,p) with exact rational edge probability p_num/p_den.
Graph random_graph(int n, long long p_num, long long p_den, std::uint64_t seed);

/// Random bipartite graph on parts of size n1 and n2; declares the bipartition.
Graph random_bipartite(int n1, int n2, long long p_num, long long p_den, std::uint64_t seed);

// -- queries ------------------------------------------------------------

/// True iff no vertex has p pairwise-nonadjacent neighbors (no induced
/// K_{1,p}). Exact subset search over neighborhoods; p must be in [2, cap].
bool is_p_claw_free(const Graph& g, int p, int cap = 8);

/// Smallest p in [2, cap] for which g is p-claw-free, or cap+1 if none.
int min_claw_free_p(const Graph& g, int cap = 8);

bool is_connected(const Graph& g);

/// Checks adjacency symmetry, sortedness, no loops/duplicates, and
/// degree-sum = 2m. Throws InvariantError on failure.
void validate_graph(const Graph& g);

// -- serialization ------------------------------------------------------

/// Text format: `c` comment lines; one `p <n> <m>` header; optional
/// `b <n1>` bipartition line; exactly m lines `e <u> <v>` with u < v.
Graph read_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

} // namespace domset
