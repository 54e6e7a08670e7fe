#include "domset/demand.hpp"
#include "domset/errors.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <cmath>

using namespace domset;

TEST_CASE("demand_at per kind") {
    Graph c4 = cycle_graph(4);
    Graph k4 = complete_graph(4);
    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});

    CHECK(demand_at(DemandSpec::kdom(2), c4, 0) == 2);
    CHECK(demand_at(DemandSpec::alpha_dom({1, 2}), p3, 1) == 1);  // ceil(2/2)
    CHECK(demand_at(DemandSpec::alpha_dom({1, 2}), k4, 0) == 2);  // ceil(3/2)
    CHECK(demand_at(DemandSpec::fdom(FFunctionSpec::half()), c4, 0) == 1);
    CHECK(demand_at(DemandSpec::fdom(FFunctionSpec::two_log_half()), k4, 0) == 2); // 2ln(2.5)=1.83..
    CHECK(demand_at(DemandSpec::vector_dom({0, 3, 1}), p3, 1) == 3);
    CHECK_THROWS_AS(demand_at(DemandSpec::kdom(1), c4, 9), PreconditionError);
    CHECK_THROWS_AS(demand_at(DemandSpec::vector_dom({1}), p3, 2), PreconditionError);
}

TEST_CASE("demand_at on a vertex with degree 3 and alpha 1/2 gives 2") {
    Graph star = star_graph(3);
    CHECK(demand_at(DemandSpec::alpha_dom({1, 2}), star, 0) == 2);
}

TEST_CASE("isolated vertices: alpha demand 0, k demand stays k") {
    Graph g = build_graph(3, {{0, 1}});
    CHECK(demand_at(DemandSpec::alpha_dom({1, 2}), g, 2) == 0);
    CHECK(demand_at(DemandSpec::fdom(FFunctionSpec::linear({2, 3})), g, 2) == 0);
    CHECK(demand_at(DemandSpec::kdom(2), g, 2) == 2);
}

TEST_CASE("alpha equals linear-f and kdom equals constant-f") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(10, 1, 2, rng());
        for (auto [num, den] : {std::pair<long long, long long>{1, 2}, {2, 3}, {1, 3}, {1, 1}}) {
            DemandSpec a = DemandSpec::alpha_dom({num, den});
            DemandSpec f = DemandSpec::fdom(FFunctionSpec::linear(Rational::of(num, den)));
            for (Vertex v = 0; v < g.n; ++v) CHECK(demand_at(a, g, v) == demand_at(f, g, v));
        }
        DemandSpec k3 = DemandSpec::kdom(3);
        DemandSpec c3 = DemandSpec::fdom(FFunctionSpec::constant(3));
        for (Vertex v = 0; v < g.n; ++v) CHECK(demand_at(k3, g, v) == demand_at(c3, g, v));
    }
}

TEST_CASE("is_dominating examples") {
    Graph c4 = cycle_graph(4);
    CHECK(is_dominating(c4, VertexSet::of(4, {0, 2}), DemandSpec::kdom(2)));
    CHECK(is_dominating(c4, VertexSet::all(4), DemandSpec::kdom(3))); // no outside vertex
    Graph star = star_graph(3);
    CHECK(is_dominating(star, VertexSet::of(4, {0}), DemandSpec::alpha_dom({1, 1})));
    CHECK_FALSE(is_dominating(c4, VertexSet::of(4, {0}), DemandSpec::kdom(2)));
}

TEST_CASE("deficiency examples") {
    Graph c4 = cycle_graph(4);
    auto d = deficiency(c4, VertexSet::of(4, {0}), DemandSpec::kdom(2));
    REQUIRE(d.size() == 3);
    CHECK(d.at(1) == 1);
    CHECK(d.at(2) == 2);
    CHECK(d.at(3) == 1);

    CHECK(deficiency(c4, VertexSet::of(4, {0, 2}), DemandSpec::kdom(2)).empty());

    auto e = deficiency(complete_graph(3), VertexSet::empty(3), DemandSpec::kdom(1));
    REQUIRE(e.size() == 3);
    for (auto [v, need] : e) CHECK(need == 1);
}

TEST_CASE("verifier agrees with the naive recount on random triples") {
    std::mt19937_64 rng(23);
    const DemandSpec specs[] = {
        DemandSpec::kdom(1), DemandSpec::kdom(2), DemandSpec::alpha_dom({1, 2}),
        DemandSpec::fdom(FFunctionSpec::half()), DemandSpec::fdom(FFunctionSpec::sqrt_plus_one())};
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = random_graph(4 + static_cast<int>(rng() % 8), 1, 2, rng());
        VertexSet d = testoracle::random_subset(g, rng);
        const DemandSpec& spec = specs[trial % 5];
        bool lib = is_dominating(g, d, spec);
        CHECK(lib == testoracle::naive_is_dominating(g, d, spec));
        CHECK(lib == deficiency(g, d, spec).empty());
    }
}

TEST_CASE("make_witness hits are recomputable") {
    Graph c4 = cycle_graph(4);
    DomWitness w = make_witness(c4, VertexSet::of(4, {0, 1}), DemandSpec::kdom(1));
    CHECK(w.per_vertex_hits == std::vector<long long>{1, 1, 1, 1});
    DomWitness w2 = make_witness(c4, VertexSet::of(4, {0, 2}), DemandSpec::kdom(2));
    CHECK(w2.per_vertex_hits == std::vector<long long>{0, 2, 0, 2});
}

TEST_CASE("find_xy reproduces the registered-function parameter table") {
    using P = std::pair<long long, long long>;
    auto half = find_xy(FFunctionSpec::half(), 50);
    CHECK(half == std::vector<P>{{1, 2}, {2, 3}, {2, 4}});
    auto sq = find_xy(FFunctionSpec::sqrt_plus_one(), 50);
    CHECK(sq == std::vector<P>{{3, 4}});
    auto lg = find_xy(FFunctionSpec::two_log_half(), 50);
    CHECK(lg == std::vector<P>{{2, 3}});
    CHECK(find_xy(FFunctionSpec::constant(3), 50).empty());
    CHECK_THROWS_AS(find_xy(FFunctionSpec::half(), 2), PreconditionError);
}

TEST_CASE("find_xy pairs re-verify under independent high-precision checks") {
    // half and linear re-check in exact integer arithmetic; the
    // transcendental ones via long double with a boundary-distance guard
    for (auto [x, y] : find_xy(FFunctionSpec::half(), 50)) {
        CHECK(ceil_div(y, 2) == x);
        CHECK(x < y);
        CHECK(ceil_div(x + 3, 2) == x + 1);
    }
    auto lceil = [](long double v) {
        long double r = std::round(v);
        if (std::fabs(v - r) < 1e-12L) return static_cast<long long>(r);
        return static_cast<long long>(std::ceil(v));
    };
    for (auto [x, y] : find_xy(FFunctionSpec::sqrt_plus_one(), 50)) {
        CHECK(lceil(std::sqrt(static_cast<long double>(y)) + 1.0L) == x);
        CHECK(lceil(std::sqrt(static_cast<long double>(x + 3)) + 1.0L) == x + 1);
    }
    for (auto [x, y] : find_xy(FFunctionSpec::two_log_half(), 50)) {
        CHECK(lceil(2.0L * std::log(1.0L + static_cast<long double>(y) / 2.0L)) == x);
        CHECK(lceil(2.0L * std::log(1.0L + static_cast<long double>(x + 3) / 2.0L)) == x + 1);
    }
}

TEST_CASE("demand spec text parsing") {
    CHECK(DemandSpec::parse("k=3").k == 3);
    CHECK(DemandSpec::parse("alpha=1/2").alpha == Rational::of(1, 2));
    CHECK(DemandSpec::parse("f=half").f == FFunctionSpec::half());
    CHECK(DemandSpec::parse("f=linear:2/3").f == FFunctionSpec::linear(Rational::of(2, 3)));
    CHECK(DemandSpec::parse("f=const:4").f == FFunctionSpec::constant(4));

    auto loader = [](const std::string&) { return std::string("1\n0\n2\n"); };
    DemandSpec v = DemandSpec::parse("vector=@reqs.txt", loader);
    CHECK(v.reqs == std::vector<long long>{1, 0, 2});

    CHECK_THROWS_AS(DemandSpec::parse("k=0"), PreconditionError);
    CHECK_THROWS_AS(DemandSpec::parse("alpha=3/2"), PreconditionError);
    CHECK_THROWS_AS(DemandSpec::parse("alpha=0"), PreconditionError);
    CHECK_THROWS_AS(DemandSpec::parse("f=cube"), ParseError);
    CHECK_THROWS_AS(DemandSpec::parse("weird=1"), ParseError);
    CHECK_THROWS_AS(DemandSpec::parse("k=1/2"), ParseError);
}
