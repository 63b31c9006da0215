#pragma once

// Brute-force oracles used to cross-check the branch-and-bound solvers on
// small graphs. Deliberately naive: correctness must be auditable at a glance.

#include <vector>

#include "qchrom/graph.hpp"

namespace qchrom::oracle {

inline bool brute_colour_rec(const Graph& g, int k, std::vector<int>& col, int v) {
    if (v == g.vertex_count()) return true;
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (col[u] == c && g.adjacent(u, v)) ok = false;
        if (!ok) continue;
        col[v] = c;
        if (brute_colour_rec(g, k, col, v + 1)) return true;
    }
    col[v] = -1;
    return false;
}

inline bool brute_k_colourable(const Graph& g, int k) {
    std::vector<int> col(g.vertex_count(), -1);
    return brute_colour_rec(g, k, col, 0);
}

inline int brute_chromatic(const Graph& g) {
    for (int k = 1;; ++k)
        if (brute_k_colourable(g, k)) return k;
}

// all 2^n vertex subsets, pairwise adjacency check
inline int brute_max_clique(const Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool clique = true;
        int size = 0;
        for (int i = 0; i < n && clique; ++i) {
            if (!(mask >> i & 1u)) continue;
            ++size;
            for (int j = i + 1; j < n && clique; ++j)
                if ((mask >> j & 1u) && !g.adjacent(i, j)) clique = false;
        }
        if (clique && size > best) best = size;
    }
    return best;
}

inline int brute_max_independent(const Graph& g) { return brute_max_clique(complement(g)); }

}  // namespace qchrom::oracle
