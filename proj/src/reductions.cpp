#include "domset/reductions.hpp"
#include "domset/errors.hpp"
#include "domset/exact.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

namespace domset {

namespace {

void require_bipartition(const Graph& g) {
    if (!g.bipartite_split)
        throw PreconditionError("graph carries no declared bipartition (b line)");
    int split = *g.bipartite_split;
    for (Vertex v = 0; v < g.n; ++v)
        for (Vertex w : g.adj[v])
            if ((v < split) == (w < split))
                throw PreconditionError("invalid bipartition: edge inside a part (" +
                                        std::to_string(v) + "," + std::to_string(w) + ")");
}

VertexSet intersect_with_source(const VertexSet& d, const GadgetReduction& red) {
    std::vector<Vertex> members;
    for (Vertex v : d.members)
        if (v < red.source.n) members.push_back(v);
    return VertexSet{red.source.n, std::move(members)};
}

} // namespace

DemandSpec GadgetReduction::gadget_spec() const {
    switch (kind) {
    case Kind::pendant_kdom:
    case Kind::bipartite_kdom: return DemandSpec::kdom(k);
    case Kind::alpha_bipartite: return DemandSpec::alpha_dom(alpha);
    case Kind::fdm: return DemandSpec::fdom(f);
    }
    throw InvariantError("unknown reduction kind");
}

std::string GadgetReduction::kind_name() const {
    switch (kind) {
    case Kind::pendant_kdom: return "pendant";
    case Kind::bipartite_kdom: return "bipartite-k";
    case Kind::alpha_bipartite: return "alpha";
    case Kind::fdm: return "fdm";
    }
    return "?";
}

GadgetReduction reduce_pendant_kdom(const Graph& g, long long k) {
    if (k < 2) throw PreconditionError("pendant reduction needs k >= 2");
    if (g.max_degree() > 3)
        std::cerr << "warning: pendant reduction ratio argument assumes max degree <= 3 "
                     "(got " << g.max_degree() << "); construction proceeds\n";

    const int n = g.n;
    const long long per = k - 1;
    auto edges = g.edges();
    GadgetReduction red;
    red.kind = GadgetReduction::Kind::pendant_kdom;
    red.source = g;
    red.k = k;
    red.pendant_sets.resize(n);
    for (Vertex v = 0; v < n; ++v) {
        for (long long i = 0; i < per; ++i) {
            Vertex pend = static_cast<Vertex>(n + v * per + i);
            red.pendant_sets[v].push_back(pend);
            edges.emplace_back(v, pend);
        }
    }
    red.gadget = build_graph(static_cast<int>(n + per * n), edges);
    return red;
}

VertexSet pendant_forward(const VertexSet& s, const GadgetReduction& red) {
    if (red.kind != GadgetReduction::Kind::pendant_kdom)
        throw PreconditionError("pendant_forward on a non-pendant reduction");
    if (!is_dominating(red.source, s, DemandSpec::kdom(1)))
        throw PreconditionError("input set does not dominate the source graph");
    std::vector<Vertex> members = s.members;
    for (const auto& sv : red.pendant_sets)
        members.insert(members.end(), sv.begin(), sv.end());
    std::sort(members.begin(), members.end());
    VertexSet d_k{red.gadget.n, std::move(members)};
    if (!is_dominating(red.gadget, d_k, red.gadget_spec()))
        throw InvariantError("forward map produced a non-k-dominating set");
    return d_k;
}

VertexSet pendant_backward(const VertexSet& d_k, const GadgetReduction& red) {
    if (red.kind != GadgetReduction::Kind::pendant_kdom)
        throw PreconditionError("pendant_backward on a non-pendant reduction");
    if (!is_dominating(red.gadget, d_k, red.gadget_spec()))
        throw PreconditionError("input set is not k-dominating in the gadget");
    VertexSet s = intersect_with_source(d_k, red);
    if (!is_dominating(red.source, s, DemandSpec::kdom(1)))
        throw InvariantError("backward map produced a non-dominating set");
    return s;
}

GadgetReduction reduce_bipartite_kdom(const Graph& g, long long k) {
    if (k < 1) throw PreconditionError("bipartite reduction needs k >= 1");
    require_bipartition(g);

    const int n = g.n;
    const int split = *g.bipartite_split;
    const long long per = k - 1;
    auto edges = g.edges();
    GadgetReduction red;
    red.kind = GadgetReduction::Kind::bipartite_kdom;
    red.source = g;
    red.k = k;
    for (long long i = 0; i < per; ++i) red.k1.push_back(static_cast<Vertex>(n + i));
    for (long long i = 0; i < per; ++i) red.k2.push_back(static_cast<Vertex>(n + per + i));
    // K1 hangs off part V1, K2 off part V2; no edges between K1 and K2
    for (Vertex v = 0; v < split; ++v)
        for (Vertex q : red.k1) edges.emplace_back(v, q);
    for (Vertex v = split; v < n; ++v)
        for (Vertex q : red.k2) edges.emplace_back(v, q);
    red.gadget = build_graph(static_cast<int>(n + 2 * per), edges);
    if (per == 0) red.gadget.bipartite_split = g.bipartite_split;
    return red;
}

GadgetReduction reduce_alpha_bipartite(const Graph& g, Rational alpha) {
    if (alpha.num <= 0 || alpha.num >= alpha.den)
        throw PreconditionError("alpha reduction needs 0 < alpha < 1");
    require_bipartition(g);
    if (g.min_degree() < 1)
        throw PreconditionError("alpha reduction needs a graph without isolated vertices");

    const long long a = alpha.num, b = alpha.den;
    const long long cap_n = ceil_div(a, b - a); // ceil(alpha / (1 - alpha))
    const int delta = g.max_degree();
    const long long per = cap_n * delta;
    const int n = g.n;
    const int split = *g.bipartite_split;

    GadgetReduction red;
    red.kind = GadgetReduction::Kind::alpha_bipartite;
    red.source = g;
    red.alpha = alpha;
    red.cap_n = cap_n;
    for (long long i = 0; i < per; ++i) red.k1.push_back(static_cast<Vertex>(n + i));
    for (long long i = 0; i < per; ++i) red.k2.push_back(static_cast<Vertex>(n + per + i));

    auto k_v = [&](Vertex v) -> long long {
        long long d = static_cast<long long>(g.adj[v].size());
        if (d < 2) return 0;
        // ceil((alpha*d - 1) / (1 - alpha)) in exact arithmetic
        long long val = ceil_div(a * d - b, b - a);
        if (val < 0 || val > per)
            throw InvariantError("k_v out of range at vertex " + std::to_string(v));
        return val;
    };

    auto edges = g.edges();
    // V1 attaches to K2, V2 attaches to K1, first k_v vertices in id order
    for (Vertex v = 0; v < split; ++v)
        for (long long i = 0; i < k_v(v); ++i) edges.emplace_back(v, red.k2[i]);
    for (Vertex v = split; v < n; ++v)
        for (long long i = 0; i < k_v(v); ++i) edges.emplace_back(v, red.k1[i]);
    red.gadget = build_graph(static_cast<int>(n + 2 * per), edges);
    return red;
}

GadgetReduction reduce_fdm(const Graph& g, const FFunctionSpec& f, long long x, long long y) {
    for (Vertex v = 0; v < g.n; ++v)
        if (g.adj[v].size() != 3)
            throw PreconditionError("fdm reduction needs a 3-regular source graph");
    if (x < 1) throw PreconditionError("fdm reduction needs x >= 1");
    if (x >= y) throw PreconditionError("fdm reduction needs x < y");
    if (f.ceil_at(y) != x)
        throw PreconditionError("fdm parameters fail x = ceil(f(y)): ceil(f(" +
                                std::to_string(y) + ")) = " + std::to_string(f.ceil_at(y)));
    if (f.ceil_at(x + 3) != x + 1)
        throw PreconditionError("fdm parameters fail x+1 = ceil(f(x+3)): ceil(f(" +
                                std::to_string(x + 3) + ")) = " + std::to_string(f.ceil_at(x + 3)));

    const int n = g.n;
    GadgetReduction red;
    red.kind = GadgetReduction::Kind::fdm;
    red.source = g;
    red.f = f;
    red.x = x;
    red.y = y;
    for (long long i = 0; i <= y; ++i) red.w.push_back(static_cast<Vertex>(n + i));
    for (long long i = 0; i < x; ++i) red.u.push_back(red.w[i]);

    auto edges = g.edges();
    for (size_t i = 0; i < red.w.size(); ++i)
        for (size_t j = i + 1; j < red.w.size(); ++j) edges.emplace_back(red.w[i], red.w[j]);
    for (Vertex q : red.u)
        for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, q);
    red.gadget = build_graph(static_cast<int>(n + y + 1), edges);
    return red;
}

VertexSet fdm_forward(const VertexSet& s, const GadgetReduction& red) {
    if (red.kind != GadgetReduction::Kind::fdm)
        throw PreconditionError("fdm_forward on a non-fdm reduction");
    if (!is_dominating(red.source, s, DemandSpec::kdom(1)))
        throw PreconditionError("input set does not dominate the source graph");
    std::vector<Vertex> members = s.members;
    members.insert(members.end(), red.u.begin(), red.u.end());
    std::sort(members.begin(), members.end());
    VertexSet d{red.gadget.n, std::move(members)};
    if (!is_dominating(red.gadget, d, red.gadget_spec()))
        throw InvariantError("forward map produced a non-f-dominating set");
    return d;
}

VertexSet fdm_backward(const VertexSet& d, const GadgetReduction& red) {
    if (red.kind != GadgetReduction::Kind::fdm)
        throw PreconditionError("fdm_backward on a non-fdm reduction");
    const DemandSpec spec = red.gadget_spec();
    if (!is_dominating(red.gadget, d, spec))
        throw PreconditionError("input set is not f-dominating in the gadget");

    const auto in = d.mask();
    std::vector<Vertex> w_minus_u(red.w.begin() + red.u.size(), red.w.end());
    bool w_minus_u_inside = true;
    for (Vertex p : w_minus_u)
        if (!in[p]) {
            w_minus_u_inside = false;
            break;
        }

    VertexSet repaired = d;
    if (w_minus_u_inside) {
        // swap repair: drop a W-U vertex, and when some U vertex is
        // missing from D bring one in to preserve f-domination
        Vertex p = w_minus_u.front();
        Vertex q = -1;
        for (Vertex cand : red.u)
            if (!in[cand]) {
                q = cand;
                break;
            }
        std::vector<Vertex> members;
        for (Vertex v : repaired.members)
            if (v != p) members.push_back(v);
        if (q != -1) members.push_back(q);
        std::sort(members.begin(), members.end());
        repaired = VertexSet{red.gadget.n, std::move(members)};
        if (!is_dominating(red.gadget, repaired, spec))
            throw InvariantError("fdm repair produced a non-f-dominating set");
    }

    VertexSet s = intersect_with_source(repaired, red);
    if (!is_dominating(red.source, s, DemandSpec::kdom(1)))
        throw InvariantError("backward map produced a non-dominating set");
    return s;
}

ReductionCheck check_reduction(const GadgetReduction& red, long long oracle_budget) {
    ExactResult src = exact_min_domset(red.source, DemandSpec::kdom(1), oracle_budget);
    if (!src.proven_optimal) throw BudgetError("oracle budget exhausted on the source graph");
    ExactResult gad = exact_min_domset(red.gadget, red.gadget_spec(), oracle_budget);
    if (!gad.proven_optimal) throw BudgetError("oracle budget exhausted on the gadget graph");

    ReductionCheck chk;
    chk.source_opt = src.optimum;
    chk.gadget_opt = gad.optimum;
    chk.nodes_source = src.nodes_explored;
    chk.nodes_gadget = gad.nodes_explored;

    std::ostringstream rel;
    switch (red.kind) {
    case GadgetReduction::Kind::pendant_kdom: {
        long long expect = src.optimum + (red.k - 1) * red.source.n;
        chk.holds = gad.optimum == expect;
        rel << "gamma_" << red.k << "(gadget) = " << gad.optimum << " vs gamma(source) + (k-1)n = "
            << expect;
        break;
    }
    case GadgetReduction::Kind::bipartite_kdom: {
        long long bound = src.optimum + 2 * red.k - 2;
        bool backward_ok =
            is_dominating(red.source, intersect_with_source(gad.witness, red), DemandSpec::kdom(1));
        chk.holds = gad.optimum <= bound && backward_ok;
        rel << "gamma_" << red.k << "(gadget) = " << gad.optimum << " <= gamma(source) + 2k-2 = "
            << bound << "; optimal-witness backward map dominates source: "
            << (backward_ok ? "yes" : "no");
        break;
    }
    case GadgetReduction::Kind::alpha_bipartite: {
        long long upper = src.optimum + 2 * red.cap_n * red.source.max_degree();
        chk.holds = src.optimum <= gad.optimum && gad.optimum <= upper;
        rel << "gamma(source) = " << src.optimum << " <= gamma_alpha(gadget) = " << gad.optimum
            << " <= gamma(source) + 2N*maxdeg = " << upper;
        break;
    }
    case GadgetReduction::Kind::fdm: {
        long long expect = red.x + src.optimum;
        chk.holds = gad.optimum == expect;
        rel << "gamma_f(gadget) = " << gad.optimum << " vs x + gamma(source) = " << expect;
        break;
    }
    }
    chk.relation = rel.str();
    return chk;
}

namespace {

std::string range_str(const std::vector<Vertex>& ids) {
    if (ids.empty()) return "-";
    return std::to_string(ids.front()) + ".." + std::to_string(ids.back());
}

} // namespace

std::string write_reduction_meta(const GadgetReduction& red) {
    std::ostringstream out;
    out << "construction=" << red.kind_name() << "\n";
    out << "source_n=" << red.source.n << "\n";
    out << "source_m=" << red.source.m << "\n";
    out << "gadget_n=" << red.gadget.n << "\n";
    out << "gadget_m=" << red.gadget.m << "\n";
    out << "source_vertices=0.." << red.source.n - 1 << "\n";
    switch (red.kind) {
    case GadgetReduction::Kind::pendant_kdom:
        out << "k=" << red.k << "\n";
        out << "pendant_size=" << red.k - 1 << "\n";
        out << "pendants=" << red.source.n << ".." << red.gadget.n - 1 << "\n";
        break;
    case GadgetReduction::Kind::bipartite_kdom:
        out << "k=" << red.k << "\n";
        out << "split=" << *red.source.bipartite_split << "\n";
        out << "k1=" << range_str(red.k1) << "\n";
        out << "k2=" << range_str(red.k2) << "\n";
        break;
    case GadgetReduction::Kind::alpha_bipartite:
        out << "alpha=" << red.alpha.str() << "\n";
        out << "N=" << red.cap_n << "\n";
        out << "split=" << *red.source.bipartite_split << "\n";
        out << "k1=" << range_str(red.k1) << "\n";
        out << "k2=" << range_str(red.k2) << "\n";
        break;
    case GadgetReduction::Kind::fdm:
        out << "f=" << red.f.name() << "\n";
        out << "x=" << red.x << "\n";
        out << "y=" << red.y << "\n";
        out << "w=" << range_str(red.w) << "\n";
        out << "u=" << range_str(red.u) << "\n";
        break;
    }
    return out.str();
}

} // namespace domset
