#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qchrom/graph.hpp"

namespace qchrom {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

enum class SolveStatus { Exact, Inconclusive };

struct SolveStats {
    std::uint64_t nodes = 0;
    double ms = 0.0;
};

struct CliqueResult {
    SolveStatus status = SolveStatus::Exact;
    int value = 0;                // proven optimum, or best incumbent if Inconclusive
    std::vector<int> witness;     // re-verified before return
    SolveStats stats;
};

struct KColourResult {
    SolveStatus status = SolveStatus::Exact;
    bool colourable = false;      // meaningful only when status == Exact
    std::optional<ClassicalColouring> witness;
    SolveStats stats;
};

struct ChromaticResult {
    SolveStatus status = SolveStatus::Exact;
    int value = 0;                // chi when Exact
    std::optional<ClassicalColouring> witness;
    SolveStats stats;
};

// Branch and bound over bitset candidate sets with a greedy-colouring bound;
// vertices renumbered into degeneracy order (ties by lowest index) so runs
// are reproducible.
CliqueResult max_clique(const Graph& g, std::uint64_t budget = kDefaultBudget);

// Maximum independent set as max clique of the complement.
CliqueResult max_independent_set(const Graph& g, std::uint64_t budget = kDefaultBudget);

// DSATUR branch and bound: branch vertex is the uncoloured vertex of highest
// saturation (ties by lowest index); only colours 0..used are tried, which
// forces the first branching vertex to colour 0.
KColourResult k_colourable(const Graph& g, int k, std::uint64_t budget = kDefaultBudget);

// Exact chi bracketed between the clique incumbent and a DSATUR greedy bound.
ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget = kDefaultBudget);

// First-fit along the given vertex order (a permutation of 0..n-1).
ClassicalColouring greedy_colouring(const Graph& g, const std::vector<int>& order);

// Non-backtracking DSATUR first-fit, used as the chromatic upper bound.
ClassicalColouring dsatur_colouring(const Graph& g);

// BFS 2-colouring; nullopt when an odd cycle exists. Edgeless graphs get all
// vertices colour 0 (a valid restriction of a 2-colouring).
std::optional<ClassicalColouring> is_bipartite(const Graph& g);

struct GodsilReport {
    SolveStatus status = SolveStatus::Exact;
    int n = 0;
    int alpha = 0;
    int omega = 0;
    bool holds = false;  // alpha * omega == n (meaningful when Exact)
};

// For vertex-transitive graphs alpha*omega == n is equivalent to chi == omega
// (fractional relaxation collapses); callers use it as a chi certificate hint.
GodsilReport godsil_identity_check(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace qchrom
