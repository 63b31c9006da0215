#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "qchrom/errors.hpp"
#include "qchrom/experiments.hpp"
#include "qchrom/graph.hpp"
#include "qchrom/repro.hpp"

using namespace qchrom;

TEST_CASE("gnp experiment is byte-deterministic") {
    GnpParams params;
    params.ns = {12, 15};
    params.trials = 3;
    params.seed = 9;
    const GnpResult a = run_gnp_experiment(params);
    const GnpResult b = run_gnp_experiment(params);
    CHECK(gnp_result_to_json_text(a) == gnp_result_to_json_text(b));
    CHECK(a.summary.total == 6);
    CHECK(a.summary.exact + a.summary.inconclusive == a.summary.total);
    // timings are excluded from the canonical form
    CHECK(gnp_result_to_json_text(a).find("elapsed") == std::string::npos);
    CHECK(gnp_result_to_json_text(a, true).find("elapsed_ms") != std::string::npos);
}

TEST_CASE("gnp experiment parameter validation") {
    GnpParams p;
    p.p = 1.0;
    CHECK_THROWS_AS(run_gnp_experiment(p), InvalidInput);  // ln(1/p) = 0
    p.p = 0.0;
    CHECK_THROWS_AS(run_gnp_experiment(p), InvalidInput);
    p = GnpParams{};
    p.trials = 0;
    CHECK_THROWS_AS(run_gnp_experiment(p), InvalidInput);
    p = GnpParams{};
    p.ns = {300};
    CHECK_THROWS_AS(run_gnp_experiment(p), InvalidInput);
    p = GnpParams{};
    p.ns = {};
    CHECK_THROWS_AS(run_gnp_experiment(p), InvalidInput);
}

TEST_CASE("per-record omega matches brute force at n=10") {
    GnpParams params;
    params.ns = {10};
    params.trials = 5;
    params.seed = 400;
    const GnpResult res = run_gnp_experiment(params);
    REQUIRE(res.records.size() == 5);
    for (std::size_t i = 0; i < res.records.size(); ++i) {
        const ExperimentRecord& rec = res.records[i];
        CHECK(rec.seed == 400 + i);
        Graph g = gnp(rec.n, rec.p, rec.seed);  // re-derive the trial graph
        CHECK(rec.omega == oracle::brute_max_clique(g));
        CHECK(rec.omega_exact);
        REQUIRE(rec.chi.has_value());  // n=10 is under the default chi cap
        CHECK(*rec.chi == oracle::brute_chromatic(g));
        CHECK(rec.omega <= *rec.chi);
    }
}

TEST_CASE("chi cap suppresses the chromatic run") {
    GnpParams params;
    params.ns = {12};
    params.trials = 2;
    params.chi_cap = 10;
    const GnpResult res = run_gnp_experiment(params);
    for (const ExperimentRecord& rec : res.records) CHECK(!rec.chi.has_value());
}

TEST_CASE("reproduction suite passes end to end") {
    const std::vector<ReproOutcome> outcomes = repro_all();
    CHECK(repro_all_pass(outcomes));
    for (const ReproOutcome& o : outcomes) {
        CAPTURE(o.item);
        CHECK(o.pass);
        CHECK(!o.inconclusive);
        CHECK(!o.claim.empty());  // every expected value carries its provenance line
    }
    // canonical json excludes timings unless asked
    const std::string text = repro_to_json_text(outcomes);
    CHECK(text.find("elapsed") == std::string::npos);
    CHECK(repro_to_json_text(outcomes, true).find("elapsed_ms") != std::string::npos);
}
