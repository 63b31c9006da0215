#include <set>
#include <utility>
#include <vector>

#include "doctest.h"
#include "qchrom/errors.hpp"
#include "qchrom/graph.hpp"

using namespace qchrom;

TEST_CASE("graph constructor normalizes edges and rejects loops") {
    Graph g(4, {{2, 1}, {1, 2}, {0, 3}});
    CHECK(g.vertex_count() == 4);
    CHECK(g.edge_count() == 2);  // duplicate collapsed
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 3}, {1, 2}});
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK(!g.adjacent(0, 1));
    CHECK(g.degree(3) == 1);
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), InvalidInput);
    CHECK_THROWS_AS(Graph(3, {{0, 5}}), InvalidInput);
    CHECK_THROWS_AS(Graph(0, {}), InvalidInput);
}

TEST_CASE("complete graph has n choose 2 edges") {
    Graph k18 = complete_graph(18);
    CHECK(k18.vertex_count() == 18);
    CHECK(k18.edge_count() == 153);
    for (int u = 0; u < 18; ++u)
        for (int v = u + 1; v < 18; ++v) CHECK(k18.adjacent(u, v));
}

TEST_CASE("cycle graph is 2-regular") {
    Graph c5 = cycle_graph(5);
    CHECK(c5.edge_count() == 5);
    for (int v = 0; v < 5; ++v) {
        CHECK(c5.degree(v) == 2);
        CHECK(c5.adjacent(v, (v + 1) % 5));
    }
}

TEST_CASE("complement is an involution and complements edge counts") {
    Graph g = gnp(12, 0.4, 99);
    Graph gc = complement(g);
    CHECK(g.edge_count() + gc.edge_count() == 12 * 11 / 2);
    CHECK(complement(gc) == g);
    for (int u = 0; u < 12; ++u)
        for (int v = u + 1; v < 12; ++v) CHECK(g.adjacent(u, v) != gc.adjacent(u, v));
}

TEST_CASE("gnp is seed-deterministic with plausible density") {
    Graph a = gnp(100, 0.5, 42);
    Graph b = gnp(100, 0.5, 42);
    CHECK(a == b);
    Graph c = gnp(100, 0.5, 43);
    CHECK(!(a == c));
    // mean 2475, sd ~35; +-5 sd
    CHECK(a.edge_count() > 2300);
    CHECK(a.edge_count() < 2650);
    CHECK(gnp(7, 0.0, 1).edge_count() == 0);
}

TEST_CASE("union_same_vertices merges edge sets") {
    Graph a(4, {{0, 1}, {1, 2}});
    Graph b(4, {{1, 2}, {2, 3}});
    Graph u = union_same_vertices(a, b);
    CHECK(u.edge_count() == 3);
    CHECK(u.adjacent(0, 1));
    CHECK(u.adjacent(2, 3));
    CHECK_THROWS_AS(union_same_vertices(a, Graph(5)), InvalidInput);
}

TEST_CASE("hadamard graph n=4: 16 vertices, 48 edges, 6-regular") {
    Graph h = hadamard_graph(4);
    CHECK(h.vertex_count() == 16);
    CHECK(h.edge_count() == 48);
    for (int v = 0; v < 16; ++v) CHECK(h.degree(v) == 6);
    // adjacency iff Hamming distance exactly 2
    CHECK(h.adjacent(0b0000, 0b0011));
    CHECK(!h.adjacent(0b0000, 0b0001));
    CHECK(!h.adjacent(0b0000, 0b1111));
}

TEST_CASE("proper colouring verification names the offending edge") {
    Graph c5 = cycle_graph(5);
    ClassicalColouring good{3, {0, 1, 0, 1, 2}};
    CHECK(verify_proper_colouring(c5, good).pass);

    ClassicalColouring bad{3, {0, 0, 1, 0, 1}};
    Report r = verify_proper_colouring(c5, bad);
    CHECK(!r.pass);
    REQUIRE(!r.violations.empty());
    CHECK(r.violations[0].kind == "monochromatic-edge");
    CHECK(r.violations[0].u == 0);
    CHECK(r.violations[0].v == 1);
    CHECK(r.violations[0].colour_a == 0);

    ClassicalColouring short_vec{3, {0, 1}};
    CHECK_THROWS_AS(verify_proper_colouring(c5, short_vec), InvalidInput);
    ClassicalColouring out_of_range{2, {0, 1, 0, 1, 2}};
    CHECK_THROWS_AS(verify_proper_colouring(c5, out_of_range), InvalidInput);
}

TEST_CASE("colouring <-> homomorphism to K_c") {
    Graph c5 = cycle_graph(5);
    ClassicalColouring col{3, {0, 1, 0, 1, 2}};
    Homomorphism h = colouring_to_homomorphism(c5, col);
    CHECK(h.target == complete_graph(3));
    CHECK(check_homomorphism(h).pass);

    // edge (0,1) collapses onto one vertex
    Report r = check_homomorphism(c5, complete_graph(3), {0, 0, 1, 2, 1});
    CHECK(!r.pass);
    CHECK(r.violations[0].kind == "edge-collapsed");
    // edge mapped to a non-edge of the target
    Report r2 = check_homomorphism(Graph(2, {{0, 1}}), Graph(3, {{0, 1}}), {0, 2});
    CHECK(!r2.pass);
    CHECK(r2.violations[0].kind == "edge-not-preserved");
}

TEST_CASE("is_connected") {
    CHECK(is_connected(cycle_graph(6)));
    CHECK(!is_connected(Graph(3, {{0, 1}})));
    CHECK(is_connected(Graph(1)));
}
