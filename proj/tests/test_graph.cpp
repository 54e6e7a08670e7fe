#include "domset/errors.hpp"
#include "domset/graph.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <set>

using namespace domset;

TEST_CASE("build_graph constructs C4 with all degrees 2") {
    Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(g.n == 4);
    CHECK(g.m == 4);
    for (Vertex v = 0; v < 4; ++v) CHECK(g.degree(v) == 2);
    validate_graph(g);
}

TEST_CASE("build_graph rejects bad input") {
    CHECK_THROWS_AS(build_graph(2, {{0, 0}}), PreconditionError);        // self-loop
    CHECK_THROWS_AS(build_graph(3, {{0, 1}, {0, 1}}), PreconditionError); // duplicate
    CHECK_THROWS_AS(build_graph(3, {{1, 0}, {0, 1}}), PreconditionError); // duplicate, reversed
    CHECK_THROWS_AS(build_graph(2, {{0, 5}}), PreconditionError);        // out of range
}

TEST_CASE("standard constructions") {
    CHECK(complete_graph(3).m == 3);
    CHECK(cycle_graph(3) == complete_graph(3));

    Graph star = complete_bipartite(1, 3);
    CHECK(star.degree(0) == 3);
    CHECK(star.max_degree() == 3);
    CHECK(star_graph(3) == star);

    CHECK(complete_graph(5).min_degree() == 4);
    CHECK_THROWS_AS(complete_graph(0), PreconditionError);
    CHECK_THROWS_AS(cycle_graph(2), PreconditionError);
    CHECK_THROWS_AS(star_graph(0), PreconditionError);
    CHECK_THROWS_AS(complete_bipartite(0, 3), PreconditionError);
}

TEST_CASE("line graph small cases") {
    CHECK(line_graph(star_graph(3)) == complete_graph(3)); // all edges share the center

    Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
    Graph lp3 = line_graph(p3);
    CHECK(lp3.n == 2);
    CHECK(lp3.m == 1);

    // edges of C4 in sorted order: (0,1),(0,3),(1,2),(2,3)
    Graph lc4 = line_graph(cycle_graph(4));
    CHECK(lc4 == build_graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));

    CHECK_THROWS_AS(line_graph(build_graph(3, {})), PreconditionError);
}

TEST_CASE("line graph properties over random inputs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph h = random_graph(9, 1, 2, seed);
        if (h.m == 0) continue;
        Graph l = line_graph(h);
        validate_graph(l);
        CHECK(l.n == h.m);
        CHECK(is_p_claw_free(l, 3));
    }
}

TEST_CASE("random_regular") {
    // K4 is the unique 3-regular graph on 4 vertices
    for (std::uint64_t seed : {0ull, 7ull, 123ull})
        CHECK(random_regular(4, 3, seed) == complete_graph(4));

    CHECK_THROWS_AS(random_regular(5, 3, 1), PreconditionError); // odd n*d
    CHECK_THROWS_AS(random_regular(4, 4, 1), PreconditionError); // d >= n

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = random_regular(10, 3, seed);
        validate_graph(g);
        CHECK(g.max_degree() == 3);
        CHECK(g.min_degree() == 3);
    }
}

TEST_CASE("random generators are reproducible and mark bipartitions") {
    CHECK(random_bipartite(2, 2, 1, 1, 5) == complete_bipartite(2, 2)); // p = 1

    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        CHECK(random_graph(12, 1, 3, seed) == random_graph(12, 1, 3, seed));
        CHECK(random_regular(8, 3, seed) == random_regular(8, 3, seed));
        Graph b = random_bipartite(4, 5, 2, 3, seed);
        CHECK(b == random_bipartite(4, 5, 2, 3, seed));
        CHECK(b.bipartite_split == 4);
        validate_graph(b);
    }
    CHECK_THROWS_AS(random_graph(4, 3, 2, 1), PreconditionError); // p > 1
}

TEST_CASE("is_p_claw_free") {
    CHECK(is_p_claw_free(line_graph(complete_graph(4)), 3));
    CHECK_FALSE(is_p_claw_free(star_graph(3), 3));
    CHECK_FALSE(is_p_claw_free(cycle_graph(6), 2));
    CHECK(is_p_claw_free(complete_graph(4), 2)); // clique neighborhoods are cliques
    CHECK_THROWS_AS(is_p_claw_free(cycle_graph(4), 9), PreconditionError);
    CHECK_THROWS_AS(is_p_claw_free(cycle_graph(4), 1), PreconditionError);

    CHECK(min_claw_free_p(complete_graph(4)) == 2);
    CHECK(min_claw_free_p(star_graph(3)) == 4);
}

TEST_CASE("edge list round trip and parse errors") {
    Graph p3 = read_edge_list("p 3 2\ne 0 1\ne 1 2\n");
    CHECK(p3 == build_graph(3, {{0, 1}, {1, 2}}));

    for (const Graph& g : {cycle_graph(4), complete_bipartite(2, 3), testoracle::petersen()}) {
        CHECK(read_edge_list(write_edge_list(g)) == g);
    }

    CHECK_THROWS_AS(read_edge_list("p 2 1\ne 0 5\n"), ParseError);   // out of range
    CHECK_THROWS_AS(read_edge_list("p 2 2\ne 0 1\n"), ParseError);   // count mismatch
    CHECK_THROWS_AS(read_edge_list("p 2 1\ne 1 0\n"), ParseError);   // u >= v
    CHECK_THROWS_AS(read_edge_list("e 0 1\n"), ParseError);          // edge before header
    CHECK_THROWS_AS(read_edge_list("p 2 1\nq 0 1\n"), ParseError);   // unknown tag
    CHECK_THROWS_AS(read_edge_list("p 2 1\ne 0 1 9\n"), ParseError); // trailing tokens
    CHECK_THROWS_AS(read_edge_list(""), ParseError);                 // no header

    // comments and bipartition lines
    Graph b = read_edge_list("c a comment\np 4 2\nb 2\ne 0 2\ne 1 3\nc trailing comment\n");
    CHECK(b.bipartite_split == 2);
    CHECK(b.m == 2);
}

TEST_CASE("generated and parsed graphs satisfy structural invariants") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = random_graph(3 + static_cast<int>(rng() % 12), 1, 2, rng());
        validate_graph(g);
        long long degree_sum = 0;
        for (Vertex v = 0; v < g.n; ++v) degree_sum += g.degree(v);
        CHECK(degree_sum == 2 * g.m);
        CHECK(read_edge_list(write_edge_list(g)) == g);
    }
}
