#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qchrom/solve.hpp"

namespace qchrom {

// One G(n, p) trial: exact clique number against the classic random-graph
// clique bound 2 ln n / ln(1/p). chi is filled only when the trial's n is
// within the chi cap and the solver finished within budget.
struct ExperimentRecord {
    std::uint64_t seed = 0;  // the trial's own seed; re-running it alone reproduces the graph
    int n = 0;
    double p = 0.0;
    int omega = 0;           // proven exact when omega_exact, else best incumbent
    bool omega_exact = true;
    std::optional<int> chi;  // absent when skipped by the cap or budget-bound
    double bound = 0.0;      // 2 ln n / ln(1/p)
    double elapsed_ms = 0.0; // excluded from canonical serialization
};

struct GnpParams {
    std::vector<int> ns = {50};
    double p = 0.5;
    int trials = 20;
    std::uint64_t seed = 1;
    double epsilon = 0.5;    // flag a trial when omega > (1+epsilon) * bound
    int chi_cap = 60;        // exact chi only for n <= this
    std::uint64_t budget = kDefaultBudget;
};

struct GnpSummary {
    int total = 0;
    int exact = 0;           // trials with proven omega
    int inconclusive = 0;
    int violations = 0;      // exact trials with omega > (1+epsilon) * bound
    double violation_fraction = 0.0;  // violations / exact (0 when no exact trials)
};

struct GnpResult {
    GnpParams params;
    std::vector<ExperimentRecord> records;
    GnpSummary summary;
};

// Deterministic harness: the record at global index i (n-values outer, trials
// inner) uses seed params.seed + i. Requires 0 < p < 1, 1 <= n <= 200,
// trials >= 1.
GnpResult run_gnp_experiment(const GnpParams& params);

// Canonical JSON: bytes depend only on the records' mathematical content.
// include_timings adds elapsed_ms fields and is therefore non-canonical.
std::string gnp_result_to_json_text(const GnpResult& result, bool include_timings = false);

}  // namespace qchrom
