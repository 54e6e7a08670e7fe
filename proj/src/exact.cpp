#include "domset/exact.hpp"
#include "domset/approx.hpp"
#include "domset/errors.hpp"

#include <algorithm>
#include <bit>

namespace domset {

long long lower_bound(const Graph& g, const DemandSpec& spec) {
    long long r_min = 0, n_pos = 0;
    for (Vertex v = 0; v < g.n; ++v) {
        long long r = demand_at(spec, g, v);
        if (r <= 0) continue;
        ++n_pos;
        if (r_min == 0 || r < r_min) r_min = r;
    }
    if (n_pos == 0) return 0;
    // counting argument: every positive-demand vertex outside D needs
    // r_min hits, and a member supplies at most max_degree of them
    return ceil_div(n_pos * r_min, g.max_degree() + r_min);
}

namespace {

struct BranchAndBound {
    const Graph& g;
    std::vector<long long> req;
    std::vector<int> state; // 0 undecided, 1 in, 2 out
    std::vector<long long> hits;
    std::vector<int> undecided_nbrs;
    long long current_size = 0;
    long long best_size;
    std::vector<char> best_mask;
    long long nodes = 0;
    long long budget;
    bool budget_hit = false;

    BranchAndBound(const Graph& graph, const DemandSpec& spec, long long node_budget)
        : g(graph), req(graph.n), state(graph.n, 0), hits(graph.n, 0),
          undecided_nbrs(graph.n), budget(node_budget) {
        for (Vertex v = 0; v < g.n; ++v) {
            req[v] = demand_at(spec, g, v);
            undecided_nbrs[v] = static_cast<int>(g.adj[v].size());
        }
    }

    long long residual(Vertex v) const {
        if (state[v] == 1) return 0;
        return std::max<long long>(0, req[v] - hits[v]);
    }

    void include(Vertex u) {
        state[u] = 1;
        ++current_size;
        for (Vertex w : g.adj[u]) {
            ++hits[w];
            --undecided_nbrs[w];
        }
    }

    void undo_include(Vertex u) {
        state[u] = 0;
        --current_size;
        for (Vertex w : g.adj[u]) {
            --hits[w];
            ++undecided_nbrs[w];
        }
    }

    // excluding u is dead if u or an already-excluded neighbor can no
    // longer reach its demand from the remaining undecided vertices
    bool exclusion_feasible(Vertex u) const {
        if (hits[u] + undecided_nbrs[u] < req[u]) return false;
        for (Vertex w : g.adj[u])
            if (state[w] == 2 && hits[w] + undecided_nbrs[w] - 1 < req[w]) return false;
        return true;
    }

    void exclude(Vertex u) {
        state[u] = 2;
        for (Vertex w : g.adj[u]) --undecided_nbrs[w];
    }

    void undo_exclude(Vertex u) {
        state[u] = 0;
        for (Vertex w : g.adj[u]) ++undecided_nbrs[w];
    }

    void search() {
        if (budget_hit) return;
        if (++nodes > budget) {
            budget_hit = true;
            return;
        }

        long long unmet_total = 0;
        for (Vertex v = 0; v < g.n; ++v) unmet_total += residual(v);
        if (unmet_total == 0) {
            if (current_size < best_size) {
                best_size = current_size;
                for (Vertex v = 0; v < g.n; ++v) best_mask[v] = (state[v] == 1);
            }
            return;
        }
        if (current_size + 1 >= best_size) return;

        // branch on the undecided vertex covering the most unmet demand
        Vertex branch = -1;
        long long best_score = 0;
        for (Vertex u = 0; u < g.n; ++u) {
            if (state[u] != 0) continue;
            long long score = residual(u);
            for (Vertex w : g.adj[u])
                if (state[w] != 1 && residual(w) > 0) ++score;
            if (score > best_score) {
                best_score = score;
                branch = u;
            }
        }
        if (branch == -1) return; // remaining unmet vertices are unreachable

        // one inclusion reduces unmet demand by at most the current best
        // score, and scores only shrink deeper in the tree
        if (current_size + ceil_div(unmet_total, best_score) >= best_size) return;

        include(branch);
        search();
        undo_include(branch);

        if (exclusion_feasible(branch)) {
            exclude(branch);
            search();
            undo_exclude(branch);
        }
    }
};

std::vector<Vertex> mask_to_members(const std::vector<char>& mask) {
    std::vector<Vertex> members;
    for (size_t v = 0; v < mask.size(); ++v)
        if (mask[v]) members.push_back(static_cast<Vertex>(v));
    return members;
}

} // namespace

ExactResult exact_min_domset(const Graph& g, const DemandSpec& spec, long long node_budget) {
    if (node_budget <= 0) throw PreconditionError("node budget must be positive");

    BranchAndBound bnb(g, spec, node_budget);

    // seed the incumbent with the greedy solution so a verified witness
    // exists even when the budget runs out
    ApproxResult seed = greedy_domset(g, spec);
    bnb.best_size = seed.witness.size();
    bnb.best_mask = seed.witness.mask();

    // demands above the degree force membership in every branch
    std::vector<Vertex> forced;
    for (Vertex v = 0; v < g.n; ++v)
        if (bnb.req[v] > static_cast<long long>(g.adj[v].size())) forced.push_back(v);
    for (Vertex v : forced) bnb.include(v);

    bnb.search();

    ExactResult res;
    res.optimum = bnb.best_size;
    res.witness = VertexSet{g.n, mask_to_members(bnb.best_mask)};
    res.nodes_explored = bnb.nodes;
    res.method = ExactResult::Method::branch_and_bound;
    res.proven_optimal = !bnb.budget_hit;
    return res;
}

ExactResult brute_force_min_domset(const Graph& g, const DemandSpec& spec) {
    if (g.n > 24) throw PreconditionError("brute force capped at n <= 24");

    std::vector<long long> req(g.n);
    std::vector<std::uint32_t> adj_mask(g.n, 0);
    for (Vertex v = 0; v < g.n; ++v) {
        req[v] = demand_at(spec, g, v);
        for (Vertex w : g.adj[v]) adj_mask[v] |= (1u << w);
    }

    auto verifies = [&](std::uint32_t mask) {
        for (Vertex v = 0; v < g.n; ++v) {
            if (mask & (1u << v)) continue;
            if (std::popcount(adj_mask[v] & mask) < req[v]) return false;
        }
        return true;
    };

    ExactResult res;
    res.method = ExactResult::Method::brute_force;
    long long tested = 0;
    for (int c = static_cast<int>(std::min<long long>(lower_bound(g, spec), g.n)); c <= g.n; ++c) {
        if (c == 0) {
            ++tested;
            if (verifies(0)) {
                res.optimum = 0;
                res.witness = VertexSet::empty(g.n);
                res.nodes_explored = tested;
                return res;
            }
            continue;
        }
        // Gosper's hack walks c-subsets in increasing numeric order
        std::uint32_t mask = (1u << c) - 1;
        const std::uint32_t limit = g.n == 32 ? 0xffffffffu : (1u << g.n);
        while (mask < limit) {
            ++tested;
            if (verifies(mask)) {
                std::vector<Vertex> members;
                for (Vertex v = 0; v < g.n; ++v)
                    if (mask & (1u << v)) members.push_back(v);
                res.optimum = c;
                res.witness = VertexSet{g.n, std::move(members)};
                res.nodes_explored = tested;
                return res;
            }
            std::uint32_t low = mask & (-mask);
            std::uint32_t ripple = mask + low;
            mask = ripple | (((mask ^ ripple) >> 2) / low);
        }
    }
    throw InvariantError("brute force found no dominating set"); // unreachable: V always verifies
}

} // namespace domset
