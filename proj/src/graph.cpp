#include "domset/graph.hpp"
#include "domset/errors.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace domset {

int Graph::degree(Vertex v) const {
    if (v < 0 || v >= n) throw PreconditionError("vertex out of range: " + std::to_string(v));
    return static_cast<int>(adj[v].size());
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& nbrs : adj) d = std::max(d, static_cast<int>(nbrs.size()));
    return d;
}

int Graph::min_degree() const {
    if (n == 0) return 0;
    int d = n;
    for (const auto& nbrs : adj) d = std::min(d, static_cast<int>(nbrs.size()));
    return d;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u < 0 || u >= n || v < 0 || v >= n) return false;
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(static_cast<size_t>(m));
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : adj[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet VertexSet::all(int universe) {
    VertexSet s{universe, {}};
    s.members.resize(universe);
    for (int v = 0; v < universe; ++v) s.members[v] = v;
    return s;
}

VertexSet VertexSet::of(int universe, std::vector<Vertex> ids) {
    std::sort(ids.begin(), ids.end());
    for (size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= universe)
            throw PreconditionError("vertex id out of range: " + std::to_string(ids[i]));
        if (i > 0 && ids[i] == ids[i - 1])
            throw PreconditionError("duplicate vertex id: " + std::to_string(ids[i]));
    }
    return VertexSet{universe, std::move(ids)};
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

std::vector<char> VertexSet::mask() const {
    std::vector<char> in(universe, 0);
    for (Vertex v : members) in[v] = 1;
    return in;
}

Graph build_graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edge_list) {
    if (n < 0) throw PreconditionError("negative vertex count");
    Graph g;
    g.n = n;
    g.adj.assign(n, {});
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw PreconditionError("edge endpoint out of range: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
        if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (Vertex u = 0; u < n; ++u) {
        auto& nbrs = g.adj[u];
        std::sort(nbrs.begin(), nbrs.end());
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw PreconditionError("duplicate edge at vertex " + std::to_string(u));
    }
    g.m = static_cast<long long>(edge_list.size());
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw PreconditionError("complete_graph needs n >= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return build_graph(n, e);
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw PreconditionError("complete_bipartite needs both parts >= 1");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < a; ++u)
        for (Vertex v = 0; v < b; ++v) e.emplace_back(u, a + v);
    Graph g = build_graph(a + b, e);
    g.bipartite_split = a;
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw PreconditionError("cycle_graph needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    return build_graph(n, e);
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw PreconditionError("star_graph needs leaves >= 1");
    return complete_bipartite(1, leaves);
}

Graph line_graph(const Graph& h) {
    if (h.m == 0) throw PreconditionError("line_graph of an edgeless graph");
    const auto h_edges = h.edges(); // sorted (u,v), u < v
    const int ln = static_cast<int>(h_edges.size());

    // index edges incident to each h-vertex; two simple-graph edges share
    // at most one endpoint, so each line-graph edge is generated once
    std::vector<std::vector<int>> incident(h.n);
    for (int ei = 0; ei < ln; ++ei) {
        incident[h_edges[ei].first].push_back(ei);
        incident[h_edges[ei].second].push_back(ei);
    }
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex w = 0; w < h.n; ++w)
        for (size_t i = 0; i < incident[w].size(); ++i)
            for (size_t j = i + 1; j < incident[w].size(); ++j)
                e.emplace_back(incident[w][i], incident[w][j]);
    return build_graph(ln, e);
}

namespace {

// mt19937_64 output is fully specified by the standard; combined with the
// rejection draw below, generators are byte-reproducible across platforms.
std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t threshold = (-bound) % bound; // 2^64 mod bound
    for (;;) {
        std::uint64_t r = rng();
        if (r >= threshold) return r % bound;
    }
}

} // namespace

Graph random_regular(int n, int d, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("random_regular needs n >= 1");
    if (d < 0 || d >= n) throw PreconditionError("random_regular needs 0 <= d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw PreconditionError("random_regular: n*d must be even");

    std::mt19937_64 rng(seed);
    const int points = n * d;
    std::vector<int> perm(points);
    const int retry_budget = 1000;
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        for (int i = 0; i < points; ++i) perm[i] = i;
        for (int i = points - 1; i > 0; --i) {
            int j = static_cast<int>(rand_below(rng, static_cast<std::uint64_t>(i) + 1));
            std::swap(perm[i], perm[j]);
        }
        std::vector<std::pair<Vertex, Vertex>> e;
        e.reserve(points / 2);
        bool simple = true;
        std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
        for (int i = 0; i < points && simple; i += 2) {
            Vertex u = perm[i] / d, v = perm[i + 1] / d;
            if (u == v || seen[u][v]) {
                simple = false;
                break;
            }
            seen[u][v] = seen[v][u] = 1;
            e.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (simple) return build_graph(n, e);
    }
    throw BudgetError("random_regular: pairing retry budget exhausted");
}

static void check_probability(long long p_num, long long p_den) {
    if (p_den <= 0 || p_num < 0 || p_num > p_den)
        throw PreconditionError("edge probability must be a rational in [0,1]");
}

Graph random_graph(int n, long long p_num, long long p_den, std::uint64_t seed) {
    if (n < 0) throw PreconditionError("negative vertex count");
    check_probability(p_num, p_den);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (static_cast<long long>(rand_below(rng, static_cast<std::uint64_t>(p_den))) < p_num)
                e.emplace_back(u, v);
    return build_graph(n, e);
}

Graph random_bipartite(int n1, int n2, long long p_num, long long p_den, std::uint64_t seed) {
    if (n1 < 1 || n2 < 1) throw PreconditionError("random_bipartite needs both parts >= 1");
    check_probability(p_num, p_den);
    std::mt19937_64 rng(seed);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex u = 0; u < n1; ++u)
        for (Vertex v = 0; v < n2; ++v)
            if (static_cast<long long>(rand_below(rng, static_cast<std::uint64_t>(p_den))) < p_num)
                e.emplace_back(u, n1 + v);
    Graph g = build_graph(n1 + n2, e);
    g.bipartite_split = n1;
    return g;
}

namespace {

// search for p pairwise-nonadjacent vertices inside nbrs, backtracking
bool has_independent_subset(const Graph& g, const std::vector<Vertex>& nbrs, size_t start,
                            std::vector<Vertex>& chosen, int p) {
    if (static_cast<int>(chosen.size()) == p) return true;
    for (size_t i = start; i < nbrs.size(); ++i) {
        Vertex c = nbrs[i];
        bool independent = true;
        for (Vertex q : chosen)
            if (g.adjacent(q, c)) {
                independent = false;
                break;
            }
        if (!independent) continue;
        chosen.push_back(c);
        if (has_independent_subset(g, nbrs, i + 1, chosen, p)) return true;
        chosen.pop_back();
    }
    return false;
}

} // namespace

bool is_p_claw_free(const Graph& g, int p, int cap) {
    if (p < 2) throw PreconditionError("is_p_claw_free needs p >= 2");
    if (p > cap)
        throw PreconditionError("is_p_claw_free: p exceeds cap " + std::to_string(cap));
    for (Vertex v = 0; v < g.n; ++v) {
        if (static_cast<int>(g.adj[v].size()) < p) continue;
        std::vector<Vertex> chosen;
        if (has_independent_subset(g, g.adj[v], 0, chosen, p)) return false;
    }
    return true;
}

int min_claw_free_p(const Graph& g, int cap) {
    for (int p = 2; p <= cap; ++p)
        if (is_p_claw_free(g, p, cap)) return p;
    return cap + 1;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == g.n;
}

void validate_graph(const Graph& g) {
    if (static_cast<int>(g.adj.size()) != g.n) throw InvariantError("adjacency size != n");
    long long degree_sum = 0;
    for (Vertex u = 0; u < g.n; ++u) {
        const auto& nbrs = g.adj[u];
        if (!std::is_sorted(nbrs.begin(), nbrs.end())) throw InvariantError("unsorted neighbor list");
        if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
            throw InvariantError("duplicate neighbor");
        for (Vertex v : nbrs) {
            if (v < 0 || v >= g.n) throw InvariantError("neighbor out of range");
            if (v == u) throw InvariantError("self-loop");
            if (!g.adjacent(v, u)) throw InvariantError("asymmetric adjacency");
        }
        degree_sum += static_cast<long long>(nbrs.size());
    }
    if (degree_sum != 2 * g.m) throw InvariantError("degree sum != 2m");
    if (g.bipartite_split) {
        int s = *g.bipartite_split;
        if (s < 0 || s > g.n) throw InvariantError("bipartite split out of range");
    }
}

Graph read_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    int n = 0;
    long long m = 0;
    std::optional<int> split;
    std::vector<std::pair<Vertex, Vertex>> e;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue; // blank line
        auto fail = [&](const std::string& why) {
            throw ParseError("line " + std::to_string(lineno) + ": " + why);
        };
        if (tag == "c") continue;
        if (tag == "p") {
            if (have_header) fail("duplicate p line");
            if (!(ls >> n >> m) || n < 0 || m < 0) fail("malformed p line");
            have_header = true;
        } else if (tag == "b") {
            if (!have_header) fail("b line before p line");
            int s;
            if (!(ls >> s) || s < 0 || s > n) fail("malformed b line");
            if (split) fail("duplicate b line");
            split = s;
        } else if (tag == "e") {
            if (!have_header) fail("e line before p line");
            Vertex u, v;
            if (!(ls >> u >> v)) fail("malformed e line");
            if (u >= v) fail("edge must satisfy u < v");
            if (static_cast<long long>(e.size()) >= m) fail("more edges than header declares");
            e.emplace_back(u, v);
        } else {
            fail("unknown line tag '" + tag + "'");
        }
        std::string rest;
        if (ls >> rest) fail("trailing tokens");
    }
    if (!have_header) throw ParseError("missing p line");
    if (static_cast<long long>(e.size()) != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) + ", got " +
                         std::to_string(e.size()));
    Graph g;
    try {
        g = build_graph(n, e);
    } catch (const PreconditionError& err) {
        throw ParseError(err.what());
    }
    g.bipartite_split = split;
    return g;
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.n << " " << g.m << "\n";
    if (g.bipartite_split) out << "b " << *g.bipartite_split << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    return out.str();
}

} // namespace domset
