#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qchrom/solve.hpp"

namespace qchrom {

// One reproduced claim: an exact expected value with its provenance, the value
// this build computed, and the verdict. Inconclusive marks solver budget
// exhaustion; the suite as a whole fails on it.
struct ReproOutcome {
    std::string item;      // stable slug, e.g. "g18-chi"
    std::string claim;     // provenance sentence for the expected value
    std::string expected;
    std::string computed;
    bool pass = false;
    bool inconclusive = false;
    double elapsed_ms = 0.0;
};

// Reproduces every concrete value the checked-in datasets and generators
// attest: the 18-vertex example end to end, the 64-vertex fourth-roots graph,
// the 27-vertex root-of-unity graph, Hadamard graphs at n = 4 (and the n = 8
// clique/certificate pinch), plus a transform round-trip battery.
std::vector<ReproOutcome> repro_all(std::uint64_t budget = kDefaultBudget);

bool repro_all_pass(const std::vector<ReproOutcome>& outcomes);

// Canonical JSON (timings excluded unless requested).
std::string repro_to_json_text(const std::vector<ReproOutcome>& outcomes,
                               bool include_timings = false);

}  // namespace qchrom
