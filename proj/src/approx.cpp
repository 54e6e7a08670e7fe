#include "domset/approx.hpp"
#include "domset/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace domset {

VertexSet mis_in(const Graph& g, const VertexSet& excluded, MisOrder order) {
    if (excluded.universe != g.n) throw PreconditionError("vertex set universe mismatch");
    const auto out = excluded.mask();

    std::vector<Vertex> candidates;
    for (Vertex v = 0; v < g.n; ++v)
        if (!out[v]) candidates.push_back(v);

    if (order == MisOrder::max_degree_first) {
        // degree inside the residual graph, ties to the lowest id
        std::vector<int> deg(g.n, 0);
        for (Vertex v : candidates)
            for (Vertex w : g.adj[v])
                if (!out[w]) ++deg[v];
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](Vertex a, Vertex b) { return deg[a] > deg[b]; });
    }

    std::vector<char> in_set(g.n, 0);
    std::vector<Vertex> members;
    for (Vertex v : candidates) {
        bool blocked = false;
        for (Vertex w : g.adj[v])
            if (in_set[w]) {
                blocked = true;
                break;
            }
        if (!blocked) {
            in_set[v] = 1;
            members.push_back(v);
        }
    }
    std::sort(members.begin(), members.end());
    return VertexSet{g.n, std::move(members)};
}

ApproxResult greedy_domset(const Graph& g, const DemandSpec& spec) {
    std::vector<long long> residual(g.n, 0);
    std::vector<char> in_set(g.n, 0);
    std::vector<Vertex> members;
    long long unmet = 0;

    auto add = [&](Vertex u) {
        in_set[u] = 1;
        members.push_back(u);
        unmet -= residual[u];
        residual[u] = 0;
        for (Vertex w : g.adj[u])
            if (!in_set[w] && residual[w] > 0) {
                --residual[w];
                --unmet;
            }
    };

    std::vector<long long> req(g.n, 0);
    for (Vertex v = 0; v < g.n; ++v) {
        req[v] = demand_at(spec, g, v);
        residual[v] = req[v];
        unmet += residual[v];
    }
    // vertices that cannot be satisfied from outside go in first
    for (Vertex v = 0; v < g.n; ++v)
        if (req[v] > static_cast<long long>(g.adj[v].size())) add(v);

    while (unmet > 0) {
        Vertex best = -1;
        long long best_score = 0;
        for (Vertex u = 0; u < g.n; ++u) {
            if (in_set[u]) continue;
            long long score = residual[u];
            for (Vertex w : g.adj[u])
                if (!in_set[w] && residual[w] > 0) ++score;
            if (score > best_score) {
                best_score = score;
                best = u;
            }
        }
        add(best);
    }

    std::sort(members.begin(), members.end());
    ApproxResult res;
    res.witness = VertexSet{g.n, std::move(members)};
    int delta = g.max_degree();
    res.claimed_bound = delta == 0 ? 1.0 : std::log(2.0 * delta) + 1.0;
    return res;
}

ApproxResult approx_k_dom_claw(const Graph& g, long long k, int p, MisOrder order) {
    if (k < 1) throw PreconditionError("approx_k_dom_claw needs k >= 1");
    if (p < 2) throw PreconditionError("approx_k_dom_claw needs p >= 2");
    if (p <= 8 && !is_p_claw_free(g, p))
        throw PreconditionError("graph is not " + std::to_string(p) + "-claw-free");

    ApproxResult res;
    std::vector<Vertex> placed;
    for (long long i = 0; i < k; ++i) {
        VertexSet layer = mis_in(g, VertexSet::of(g.n, placed), order);
        placed.insert(placed.end(), layer.members.begin(), layer.members.end());
        res.layers.push_back(std::move(layer));
    }
    std::sort(placed.begin(), placed.end());
    res.witness = VertexSet{g.n, std::move(placed)};
    res.claimed_bound = static_cast<double>(std::max<long long>(p - 1, k));
    return res;
}

ApproxResult approx_alpha_dom_claw(const Graph& g, Rational alpha, int p, MisOrder order) {
    if (alpha.num <= 0 || alpha.num >= alpha.den)
        throw PreconditionError("approx_alpha_dom_claw needs 0 < alpha < 1");
    int delta_min = g.min_degree();
    if (delta_min < 1) throw PreconditionError("approx_alpha_dom_claw needs min degree >= 1");

    const long long k_base = ceil_div(alpha.num * delta_min, alpha.den);
    const long long k_max = ceil_div(alpha.num * g.max_degree(), alpha.den);
    const DemandSpec spec = DemandSpec::alpha_dom(alpha);

    ApproxResult res = approx_k_dom_claw(g, k_base, p, order);
    res.claimed_bound = static_cast<double>(std::max<long long>(p - 1, k_base));

    // k_base layers may fall short for vertices of degree above delta_min;
    // add layers until the verifier passes (k_max layers always suffice)
    while (!is_dominating(g, res.witness, spec) &&
           static_cast<long long>(res.layers.size()) < k_max) {
        res.escalated = true;
        VertexSet layer = mis_in(g, res.witness, order);
        std::vector<Vertex> merged = res.witness.members;
        merged.insert(merged.end(), layer.members.begin(), layer.members.end());
        std::sort(merged.begin(), merged.end());
        res.witness = VertexSet{g.n, std::move(merged)};
        res.layers.push_back(std::move(layer));
    }
    return res;
}

} // namespace domset
