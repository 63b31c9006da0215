#include <numeric>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qchrom/datasets.hpp"
#include "qchrom/graph.hpp"
#include "qchrom/solve.hpp"

using namespace qchrom;

TEST_CASE("solver matches brute force on small random graphs") {
    int seed = 0;
    for (int n = 1; n <= 8; ++n) {
        for (double p : {0.2, 0.5, 0.8}) {
            for (int t = 0; t < 4; ++t) {
                Graph g = gnp(n, p, static_cast<std::uint64_t>(1000 + ++seed));
                CAPTURE(n);
                CAPTURE(p);
                CAPTURE(seed);
                const CliqueResult cl = max_clique(g);
                CHECK(cl.status == SolveStatus::Exact);
                CHECK(cl.value == oracle::brute_max_clique(g));
                CHECK(static_cast<int>(cl.witness.size()) == cl.value);
                const CliqueResult is = max_independent_set(g);
                CHECK(is.value == oracle::brute_max_independent(g));
                const ChromaticResult ch = chromatic_number(g);
                CHECK(ch.status == SolveStatus::Exact);
                CHECK(ch.value == oracle::brute_chromatic(g));
                REQUIRE(ch.witness.has_value());
                CHECK(verify_proper_colouring(g, *ch.witness).pass);
                CHECK(ch.witness->c == ch.value);
            }
        }
    }
}

TEST_CASE("known parameters of named graphs") {
    Graph c5 = cycle_graph(5);
    CHECK(chromatic_number(c5).value == 3);
    CHECK(max_clique(c5).value == 2);
    CHECK(max_independent_set(c5).value == 2);

    Graph k6 = complete_graph(6);
    CHECK(chromatic_number(k6).value == 6);
    CHECK(max_clique(k6).value == 6);
    CHECK(max_independent_set(k6).value == 1);

    CHECK(chromatic_number(cycle_graph(6)).value == 2);
    CHECK(chromatic_number(Graph(4)).value == 1);
}

TEST_CASE("18-vertex dataset: chi 5, omega 4") {
    auto [g, rep] = g18_dataset();
    CHECK(g.vertex_count() == 18);
    CHECK(chromatic_number(g).value == 5);
    CHECK(max_clique(g).value == 4);
}

TEST_CASE("k_colourable brackets chi") {
    Graph c5 = cycle_graph(5);
    KColourResult no = k_colourable(c5, 2);
    CHECK(no.status == SolveStatus::Exact);
    CHECK(!no.colourable);
    KColourResult yes = k_colourable(c5, 3);
    CHECK(yes.colourable);
    REQUIRE(yes.witness.has_value());
    CHECK(verify_proper_colouring(c5, *yes.witness).pass);
}

TEST_CASE("tiny budget reports inconclusive with a valid incumbent") {
    Graph g = gnp(60, 0.5, 7);
    CliqueResult r = max_clique(g, 10);
    CHECK(r.status == SolveStatus::Inconclusive);
    // the incumbent is still a clique
    for (std::size_t i = 0; i < r.witness.size(); ++i)
        for (std::size_t j = i + 1; j < r.witness.size(); ++j)
            CHECK(g.adjacent(r.witness[i], r.witness[j]));
    ChromaticResult c = chromatic_number(g, 10);
    CHECK(c.status == SolveStatus::Inconclusive);
}

TEST_CASE("solver runs are deterministic") {
    Graph g = gnp(30, 0.5, 11);
    CliqueResult a = max_clique(g);
    CliqueResult b = max_clique(g);
    CHECK(a.value == b.value);
    CHECK(a.witness == b.witness);
    CHECK(a.stats.nodes == b.stats.nodes);
    ChromaticResult ca = chromatic_number(g);
    ChromaticResult cb = chromatic_number(g);
    CHECK(ca.value == cb.value);
    CHECK(ca.witness->colour == cb.witness->colour);
}

TEST_CASE("greedy and dsatur colourings are proper") {
    Graph c5 = cycle_graph(5);
    std::vector<int> order(5);
    std::iota(order.begin(), order.end(), 0);
    ClassicalColouring greedy = greedy_colouring(c5, order);
    CHECK(verify_proper_colouring(c5, greedy).pass);
    CHECK(greedy.c == 3);
    CHECK(greedy.colour == std::vector<int>{0, 1, 0, 1, 2});

    Graph g = gnp(40, 0.3, 3);
    ClassicalColouring ds = dsatur_colouring(g);
    CHECK(verify_proper_colouring(g, ds).pass);
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(cycle_graph(6)).has_value());
    CHECK(!is_bipartite(cycle_graph(5)).has_value());
    auto col = is_bipartite(Graph(3));
    REQUIRE(col.has_value());
    CHECK(col->colour == std::vector<int>{0, 0, 0});
    auto two = is_bipartite(Graph(2, {{0, 1}}));
    REQUIRE(two.has_value());
    CHECK(verify_proper_colouring(Graph(2, {{0, 1}}), *two).pass);
}

TEST_CASE("godsil identity separates K_4 from C_5") {
    GodsilReport k4 = godsil_identity_check(complete_graph(4));
    CHECK(k4.alpha == 1);
    CHECK(k4.omega == 4);
    CHECK(k4.holds);
    GodsilReport c5 = godsil_identity_check(cycle_graph(5));
    CHECK(c5.alpha == 2);
    CHECK(c5.omega == 2);
    CHECK(!c5.holds);
}
