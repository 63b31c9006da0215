#include "qchrom/solve.hpp"

#include <algorithm>
#include <chrono>

#include "qchrom/errors.hpp"

namespace qchrom {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void require_rows(const Graph& g) {
    if (!g.has_rows())
        throw InvalidInput("graph too large for the exact solvers");
}

// smallest-last removal, ties by lowest index
std::vector<int> degeneracy_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> deg(n), order;
    std::vector<char> removed(n, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!removed[v] && (pick < 0 || deg[v] < deg[pick])) pick = v;
        removed[pick] = 1;
        order.push_back(pick);
        g.row(pick).for_each([&](std::size_t w) {
            if (!removed[w]) --deg[w];
        });
    }
    return order;
}

struct CliqueSearch {
    int n = 0;
    std::vector<Bitset> adj;  // renumbered
    std::uint64_t budget = 0, nodes = 0;
    bool exhausted = false;
    int best = 0;
    std::vector<int> bestset, cur;

    void expand(const Bitset& p) {
        if (exhausted || ++nodes > budget) {
            exhausted = true;
            return;
        }
        // greedy colour classes of the candidate subgraph give the bound:
        // a clique meets each class at most once
        std::vector<int> order, colour;
        Bitset un = p;
        int k = 0;
        while (un.any()) {
            ++k;
            Bitset q = un;
            while (true) {
                std::size_t v = q.first();
                if (v == Bitset::npos) break;
                un.reset(v);
                q.reset(v);
                q.andnot_with(adj[v]);
                order.push_back(static_cast<int>(v));
                colour.push_back(k);
            }
        }
        Bitset pm = p;
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(cur.size()) + colour[i] <= best) return;
            const int v = order[i];
            cur.push_back(v);
            Bitset np = Bitset::intersection(pm, adj[v]);
            if (np.none()) {
                if (static_cast<int>(cur.size()) > best) {
                    best = static_cast<int>(cur.size());
                    bestset = cur;
                }
            } else {
                expand(np);
            }
            cur.pop_back();
            pm.reset(static_cast<std::size_t>(v));
            if (exhausted) return;
        }
    }
};

}  // namespace

CliqueResult max_clique(const Graph& g, std::uint64_t budget) {
    require_rows(g);
    const auto t0 = Clock::now();
    const int n = g.vertex_count();
    const std::vector<int> order = degeneracy_order(g);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    CliqueSearch s;
    s.n = n;
    s.budget = budget;
    s.adj.assign(n, Bitset(static_cast<std::size_t>(n)));
    for (auto [u, v] : g.edges()) {
        s.adj[pos[u]].set(static_cast<std::size_t>(pos[v]));
        s.adj[pos[v]].set(static_cast<std::size_t>(pos[u]));
    }
    Bitset all(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) all.set(static_cast<std::size_t>(v));
    s.expand(all);

    CliqueResult r;
    r.status = s.exhausted ? SolveStatus::Inconclusive : SolveStatus::Exact;
    r.value = s.best;
    for (int v : s.bestset) r.witness.push_back(order[v]);
    std::sort(r.witness.begin(), r.witness.end());
    r.stats.nodes = s.nodes;
    r.stats.ms = elapsed_ms(t0);
    // witness is re-verified before being returned
    for (std::size_t i = 0; i < r.witness.size(); ++i)
        for (std::size_t j = i + 1; j < r.witness.size(); ++j)
            if (!g.adjacent(r.witness[i], r.witness[j]))
                throw VerificationError("internal: clique witness failed re-verification");
    return r;
}

CliqueResult max_independent_set(const Graph& g, std::uint64_t budget) {
    require_rows(g);
    CliqueResult r = max_clique(complement(g), budget);
    for (std::size_t i = 0; i < r.witness.size(); ++i)
        for (std::size_t j = i + 1; j < r.witness.size(); ++j)
            if (g.adjacent(r.witness[i], r.witness[j]))
                throw VerificationError("internal: independent set witness failed re-verification");
    return r;
}

namespace {

struct ColourSearch {
    const Graph* g = nullptr;
    int n = 0, k = 0;
    std::uint64_t budget = 0, nodes = 0;
    bool exhausted = false;
    std::vector<int> colour;
    std::vector<int> satdeg;
    std::vector<std::vector<int>> neigh_colour_count;  // [v][c]
    bool found = false;
    std::vector<int> out;

    void assign(int v, int c) {
        colour[v] = c;
        g->row(v).for_each([&](std::size_t w) {
            if (colour[w] < 0 && ++neigh_colour_count[w][c] == 1) ++satdeg[w];
        });
    }
    void unassign(int v, int c) {
        colour[v] = -1;
        g->row(v).for_each([&](std::size_t w) {
            if (colour[w] < 0 && --neigh_colour_count[w][c] == 0) --satdeg[w];
        });
    }

    bool dfs(int coloured, int used) {
        if (exhausted || ++nodes > budget) {
            exhausted = true;
            return false;
        }
        if (coloured == n) {
            found = true;
            out = colour;
            return true;
        }
        int pick = -1, bestsat = -1;
        for (int v = 0; v < n; ++v)
            if (colour[v] < 0 && satdeg[v] > bestsat) {
                bestsat = satdeg[v];
                pick = v;
            }
        // colours above 'used' are interchangeable, try only the first fresh one
        const int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            if (neigh_colour_count[pick][c] > 0) continue;
            assign(pick, c);
            if (dfs(coloured + 1, std::max(used, c + 1))) return true;
            unassign(pick, c);
            if (exhausted) return false;
        }
        return false;
    }
};

}  // namespace

KColourResult k_colourable(const Graph& g, int k, std::uint64_t budget) {
    require_rows(g);
    if (k < 1) throw InvalidInput("k_colourable needs k >= 1");
    const auto t0 = Clock::now();
    const int n = g.vertex_count();
    ColourSearch s;
    s.g = &g;
    s.n = n;
    s.k = k;
    s.budget = budget;
    s.colour.assign(n, -1);
    s.satdeg.assign(n, 0);
    s.neigh_colour_count.assign(n, std::vector<int>(k, 0));
    s.dfs(0, 0);

    KColourResult r;
    r.stats.nodes = s.nodes;
    r.stats.ms = elapsed_ms(t0);
    if (s.found) {
        ClassicalColouring col{k, s.out};
        if (!verify_proper_colouring(g, col).pass)
            throw VerificationError("internal: colouring witness failed re-verification");
        r.status = SolveStatus::Exact;
        r.colourable = true;
        r.witness = std::move(col);
    } else if (s.exhausted) {
        r.status = SolveStatus::Inconclusive;
    } else {
        r.status = SolveStatus::Exact;
        r.colourable = false;
    }
    return r;
}

ClassicalColouring greedy_colouring(const Graph& g, const std::vector<int>& order) {
    const int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw InvalidInput("greedy order must list every vertex once");
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v])
            throw InvalidInput("greedy order must be a permutation of the vertices");
        seen[v] = 1;
    }
    ClassicalColouring col;
    col.colour.assign(n, -1);
    int used = 0;
    std::vector<char> taken(n + 1, 0);
    for (int v : order) {
        std::fill(taken.begin(), taken.end(), 0);
        for (int w = 0; w < n; ++w)
            if (col.colour[w] >= 0 && g.adjacent(v, w)) taken[col.colour[w]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        col.colour[v] = c;
        used = std::max(used, c + 1);
    }
    col.c = used;
    return col;
}

ClassicalColouring dsatur_colouring(const Graph& g) {
    const int n = g.vertex_count();
    ClassicalColouring col;
    col.colour.assign(n, -1);
    std::vector<std::vector<char>> adjacent_colours(n, std::vector<char>(n + 1, 0));
    std::vector<int> satdeg(n, 0);
    int used = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, bestsat = -1;
        for (int v = 0; v < n; ++v)
            if (col.colour[v] < 0 && satdeg[v] > bestsat) {
                bestsat = satdeg[v];
                pick = v;
            }
        int c = 0;
        while (adjacent_colours[pick][c]) ++c;
        col.colour[pick] = c;
        used = std::max(used, c + 1);
        g.row(pick).for_each([&](std::size_t w) {
            if (col.colour[w] < 0 && !adjacent_colours[w][c]) {
                adjacent_colours[w][c] = 1;
                ++satdeg[w];
            }
        });
    }
    col.c = used;
    return col;
}

ChromaticResult chromatic_number(const Graph& g, std::uint64_t budget) {
    require_rows(g);
    const auto t0 = Clock::now();
    ChromaticResult r;

    CliqueResult clq = max_clique(g, budget);
    r.stats.nodes += clq.stats.nodes;
    // the incumbent clique is a valid lower bound even if the clique search
    // ran out of budget
    const int lb = std::max(clq.value, 1);

    ClassicalColouring ub_col = dsatur_colouring(g);
    if (ub_col.c == lb) {
        r.value = lb;
        r.witness = std::move(ub_col);
        r.stats.ms = elapsed_ms(t0);
        return r;
    }
    for (int k = lb; k < ub_col.c; ++k) {
        KColourResult kc = k_colourable(g, k, budget);
        r.stats.nodes += kc.stats.nodes;
        if (kc.status == SolveStatus::Inconclusive) {
            r.status = SolveStatus::Inconclusive;
            r.witness = std::move(ub_col);  // best known colouring, not optimal
            r.stats.ms = elapsed_ms(t0);
            return r;
        }
        if (kc.colourable) {
            r.value = k;
            r.witness = std::move(kc.witness);
            r.stats.ms = elapsed_ms(t0);
            return r;
        }
    }
    r.value = ub_col.c;
    r.witness = std::move(ub_col);
    r.stats.ms = elapsed_ms(t0);
    return r;
}

std::optional<ClassicalColouring> is_bipartite(const Graph& g) {
    const int n = g.vertex_count();
    ClassicalColouring col;
    col.c = 2;
    col.colour.assign(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (col.colour[s] >= 0) continue;
        col.colour[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v) {
                if (!g.adjacent(u, v)) continue;
                if (col.colour[v] < 0) {
                    col.colour[v] = 1 - col.colour[u];
                    stack.push_back(v);
                } else if (col.colour[v] == col.colour[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return col;
}

GodsilReport godsil_identity_check(const Graph& g, std::uint64_t budget) {
    GodsilReport rep;
    rep.n = g.vertex_count();
    CliqueResult a = max_independent_set(g, budget);
    CliqueResult w = max_clique(g, budget);
    rep.alpha = a.value;
    rep.omega = w.value;
    rep.status = (a.status == SolveStatus::Exact && w.status == SolveStatus::Exact)
                     ? SolveStatus::Exact
                     : SolveStatus::Inconclusive;
    rep.holds = rep.status == SolveStatus::Exact &&
                static_cast<long long>(rep.alpha) * rep.omega == rep.n;
    return rep;
}

}  // namespace qchrom
