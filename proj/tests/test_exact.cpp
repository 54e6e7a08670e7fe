#include "domset/errors.hpp"
#include "domset/exact.hpp"

#include "doctest.h"
#include "oracle.hpp"

using namespace domset;

namespace {
constexpr long long kBudget = 5'000'000;
}

TEST_CASE("lower_bound formula") {
    CHECK(lower_bound(cycle_graph(4), DemandSpec::kdom(1)) == 2); // ceil(4/3)
    CHECK(lower_bound(random_regular(8, 3, 3), DemandSpec::kdom(1)) == 2); // n/4 on cubic graphs
    CHECK(lower_bound(cycle_graph(5), DemandSpec::vector_dom({0, 0, 0, 0, 0})) == 0);
    // demand above the degree everywhere: bound equals the vertex count
    CHECK(lower_bound(build_graph(3, {}), DemandSpec::kdom(1)) == 3);
}

TEST_CASE("exact solver on named instances") {
    for (int k = 1; k <= 3; ++k) {
        ExactResult r = exact_min_domset(complete_graph(5), DemandSpec::kdom(k), kBudget);
        CHECK(r.optimum == k); // any k vertices work, k-1 cannot
        CHECK(r.proven_optimal);
        CHECK(is_dominating(complete_graph(5), r.witness, DemandSpec::kdom(k)));
    }
    CHECK(exact_min_domset(cycle_graph(4), DemandSpec::kdom(1), kBudget).optimum == 2);
    CHECK(exact_min_domset(cycle_graph(4), DemandSpec::kdom(2), kBudget).optimum == 2);
    CHECK(exact_min_domset(star_graph(3), DemandSpec::kdom(1), kBudget).optimum == 1);
    CHECK(exact_min_domset(testoracle::petersen(), DemandSpec::kdom(1), kBudget).optimum == 3);
    CHECK(exact_min_domset(complete_graph(4), DemandSpec::fdom(FFunctionSpec::half()), kBudget)
              .optimum == 2);
}

TEST_CASE("brute force on named instances") {
    ExactResult r = brute_force_min_domset(cycle_graph(4), DemandSpec::kdom(2));
    CHECK(r.optimum == 2);
    CHECK(r.witness == VertexSet::of(4, {0, 2})); // first verifying 2-subset in order
    CHECK(r.method == ExactResult::Method::brute_force);

    CHECK(brute_force_min_domset(star_graph(3), DemandSpec::kdom(1)).optimum == 1);
    CHECK(brute_force_min_domset(testoracle::petersen(), DemandSpec::kdom(1)).optimum == 3);
    CHECK(brute_force_min_domset(complete_graph(4), DemandSpec::fdom(FFunctionSpec::half()))
              .optimum == 2);

    Graph big = random_graph(25, 1, 2, 1);
    CHECK_THROWS_AS(brute_force_min_domset(big, DemandSpec::kdom(1)), PreconditionError);
}

TEST_CASE("branch and bound matches brute force and the naive oracle") {
    std::mt19937_64 rng(41);
    const DemandSpec specs[] = {
        DemandSpec::kdom(1), DemandSpec::kdom(2), DemandSpec::kdom(3),
        DemandSpec::alpha_dom({1, 2}), DemandSpec::alpha_dom({2, 3}),
        DemandSpec::fdom(FFunctionSpec::half()), DemandSpec::fdom(FFunctionSpec::sqrt_plus_one()),
        DemandSpec::fdom(FFunctionSpec::two_log_half())};
    for (int trial = 0; trial < 60; ++trial) {
        Graph g = random_graph(4 + static_cast<int>(rng() % 7), 1, 2, rng());
        const DemandSpec& spec = specs[trial % 8];
        ExactResult bnb = exact_min_domset(g, spec, kBudget);
        ExactResult bf = brute_force_min_domset(g, spec);
        REQUIRE(bnb.proven_optimal);
        CHECK(bnb.optimum == bf.optimum);
        CHECK(is_dominating(g, bnb.witness, spec));
        CHECK(is_dominating(g, bf.witness, spec));
        if (trial % 4 == 0) CHECK(bnb.optimum == testoracle::naive_min_domset(g, spec));
    }
}

TEST_CASE("optimum is monotone in k and alpha") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 12; ++trial) {
        Graph g = random_graph(8, 1, 2, rng());
        long long prev = -1;
        for (int k = 1; k <= 3; ++k) {
            long long opt = exact_min_domset(g, DemandSpec::kdom(k), kBudget).optimum;
            CHECK(opt >= prev);
            prev = opt;
        }
        long long a_half = exact_min_domset(g, DemandSpec::alpha_dom({1, 2}), kBudget).optimum;
        long long a_two3 = exact_min_domset(g, DemandSpec::alpha_dom({2, 3}), kBudget).optimum;
        long long a_one = exact_min_domset(g, DemandSpec::alpha_dom({1, 1}), kBudget).optimum;
        CHECK(a_half <= a_two3);
        CHECK(a_two3 <= a_one);

        long long f_lin = exact_min_domset(
            g, DemandSpec::fdom(FFunctionSpec::linear({1, 2})), kBudget).optimum;
        CHECK(a_half == f_lin);
    }
}

TEST_CASE("no witness vertex removal yields a smaller verified set") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 8; ++trial) {
        Graph g = random_graph(9, 1, 2, rng());
        DemandSpec spec = DemandSpec::kdom(2);
        ExactResult r = exact_min_domset(g, spec, kBudget);
        for (Vertex drop : r.witness.members) {
            std::vector<Vertex> rest;
            for (Vertex v : r.witness.members)
                if (v != drop) rest.push_back(v);
            CHECK_FALSE(is_dominating(g, VertexSet{g.n, rest}, spec));
        }
    }
}

TEST_CASE("budget exhaustion still returns a verified witness") {
    Graph g = random_graph(14, 1, 2, 11);
    DemandSpec spec = DemandSpec::kdom(2);
    ExactResult r = exact_min_domset(g, spec, 3);
    CHECK_FALSE(r.proven_optimal);
    CHECK(is_dominating(g, r.witness, spec));
    CHECK(r.optimum >= exact_min_domset(g, spec, kBudget).optimum);
    CHECK_THROWS_AS(exact_min_domset(g, spec, 0), PreconditionError);
}

TEST_CASE("isolated vertices are forced members under k-domination") {
    Graph g = build_graph(4, {{0, 1}});
    ExactResult r = exact_min_domset(g, DemandSpec::kdom(1), kBudget);
    CHECK(r.optimum == 3); // one endpoint plus both isolated vertices
    CHECK(r.witness.contains(2));
    CHECK(r.witness.contains(3));

    // under alpha-domination the isolated vertices demand nothing
    CHECK(exact_min_domset(g, DemandSpec::alpha_dom({1, 2}), kBudget).optimum == 1);
}
