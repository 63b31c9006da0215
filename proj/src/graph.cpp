#include "qchrom/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <queue>

#include "qchrom/errors.hpp"
#include "qchrom/rng.hpp"

namespace qchrom {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n <= 0) throw InvalidInput("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidInput("edge endpoint out of range");
        if (u == v) throw InvalidInput("loops are not allowed");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    if (n_ <= kRowLimit) {
        rows_.assign(n_, Bitset(static_cast<std::size_t>(n_)));
        for (auto [u, v] : edges_) {
            rows_[u].set(v);
            rows_[v].set(u);
        }
    }
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw InvalidInput("vertex out of range");
    if (u == v) return false;
    if (!rows_.empty()) return rows_[u].test(static_cast<std::size_t>(v));
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw InvalidInput("vertex out of range");
    if (!rows_.empty()) return static_cast<int>(rows_[v].count());
    int d = 0;
    for (auto [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

const Bitset& Graph::row(int v) const {
    if (rows_.empty()) throw InvalidInput("graph too large for adjacency rows");
    if (v < 0 || v >= n_) throw InvalidInput("vertex out of range");
    return rows_[v];
}

Graph complete_graph(int n) {
    if (n <= 0) throw InvalidInput("complete graph needs n >= 1");
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw InvalidInput("cycle needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e));
}

Graph complement(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph union_same_vertices(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count())
        throw InvalidInput("union requires identical vertex sets");
    auto e = a.edges();
    const auto& eb = b.edges();
    e.insert(e.end(), eb.begin(), eb.end());
    return Graph(a.vertex_count(), std::move(e));
}

Graph gnp(int n, double p, std::uint64_t seed) {
    if (n <= 0) throw InvalidInput("gnp needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("gnp needs p in [0,1]");
    SplitMix64 rng(seed);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.next_double() < p) e.emplace_back(u, v);
    return Graph(n, std::move(e));
}

Graph hadamard_graph(int n) {
    if (n <= 0) throw InvalidInput("hadamard graph needs n >= 1");
    if (n > 20) throw InvalidInput("hadamard graph size guard: n must be <= 20");
    if (n % 2 != 0)
        throw InvalidInput("odd n gives an edgeless hadamard graph, refusing");
    const std::uint32_t count = std::uint32_t{1} << n;
    // connection set: all masks of weight n/2; edges u ~ u^m
    std::vector<std::uint32_t> masks;
    for (std::uint32_t m = 1; m < count; ++m)
        if (std::popcount(m) == n / 2) masks.push_back(m);
    std::vector<std::pair<int, int>> e;
    e.reserve(static_cast<std::size_t>(count) * masks.size() / 2);
    for (std::uint32_t u = 0; u < count; ++u)
        for (std::uint32_t m : masks) {
            std::uint32_t v = u ^ m;
            if (u < v) e.emplace_back(static_cast<int>(u), static_cast<int>(v));
        }
    return Graph(static_cast<int>(count), std::move(e));
}

Report check_homomorphism(const Homomorphism& h) {
    Report r;
    const int ns = h.source.vertex_count();
    if (static_cast<int>(h.map.size()) != ns)
        throw InvalidInput("homomorphism map must cover every source vertex");
    for (int x = 0; x < ns; ++x)
        if (h.map[x] < 0 || h.map[x] >= h.target.vertex_count())
            throw InvalidInput("homomorphism map image out of range");
    for (auto [u, v] : h.source.edges()) {
        const int fu = h.map[u], fv = h.map[v];
        if (fu == fv || !h.target.adjacent(fu, fv)) {
            r.pass = false;
            Violation viol;
            viol.kind = fu == fv ? "edge-collapsed" : "edge-not-preserved";
            viol.u = u;
            viol.v = v;
            r.violations.push_back(viol);
        }
    }
    r.summary = r.pass ? "homomorphism" : "not a homomorphism";
    return r;
}

Report check_homomorphism(const Graph& source, const Graph& target, const std::vector<int>& map) {
    return check_homomorphism(Homomorphism{source, target, map});
}

Report verify_proper_colouring(const Graph& g, const ClassicalColouring& col) {
    Report r;
    if (col.c <= 0) throw InvalidInput("colouring needs c >= 1");
    if (static_cast<int>(col.colour.size()) != g.vertex_count())
        throw InvalidInput("colouring must cover every vertex");
    for (int v = 0; v < g.vertex_count(); ++v)
        if (col.colour[v] < 0 || col.colour[v] >= col.c)
            throw InvalidInput("colour out of range at vertex " + std::to_string(v));
    for (auto [u, v] : g.edges()) {
        if (col.colour[u] == col.colour[v]) {
            r.pass = false;
            Violation viol;
            viol.kind = "monochromatic-edge";
            viol.u = u;
            viol.v = v;
            viol.colour_a = col.colour[u];
            viol.colour_b = col.colour[v];
            r.violations.push_back(viol);
        }
    }
    r.summary = r.pass ? "proper colouring" : "improper colouring";
    return r;
}

Homomorphism colouring_to_homomorphism(const Graph& g, const ClassicalColouring& col) {
    if (static_cast<int>(col.colour.size()) != g.vertex_count())
        throw InvalidInput("colouring must cover every vertex");
    return Homomorphism{g, complete_graph(col.c), col.colour};
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v = 0; v < n; ++v)
            if (!seen[v] && g.adjacent(u, v)) {
                seen[v] = 1;
                ++reached;
                q.push(v);
            }
    }
    return reached == n;
}

}  // namespace qchrom
