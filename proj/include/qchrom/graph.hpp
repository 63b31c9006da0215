#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qchrom/bitset.hpp"

namespace qchrom {

// Simple undirected graph, immutable after construction. Edges are kept as a
// sorted unique list with u < v; adjacency bitset rows are built whenever the
// vertex count permits so that adjacency tests and the solvers run on O(1)
// word operations. Loops are rejected, duplicate edges collapse.
class Graph {
  public:
    // rows are worth 32 MB at this limit; beyond it adjacency falls back to
    // binary search on the sorted edge list (generators only, solvers refuse)
    static constexpr int kRowLimit = 1 << 14;

    Graph(int n, std::vector<std::pair<int, int>> edges);
    explicit Graph(int n) : Graph(n, {}) {}

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const;

    bool has_rows() const { return !rows_.empty(); }
    const Bitset& row(int v) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<Bitset> rows_;
};

// pass/fail with the offending constraints listed; residual is meaningful for
// numeric checks only
struct Violation {
    std::string kind;
    int u = -1;
    int v = -1;
    int colour_a = -1;
    int colour_b = -1;
    double residual = 0.0;
    std::string note;
};

struct Report {
    bool pass = true;
    std::vector<Violation> violations;
    std::string summary;
};

// colours are 0..c-1, one per vertex
struct ClassicalColouring {
    int c = 0;
    std::vector<int> colour;
};

struct Homomorphism {
    Graph source;
    Graph target;
    std::vector<int> map;  // vertex of source -> vertex of target
};

// generators and graph algebra
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph complement(const Graph& g);
Graph union_same_vertices(const Graph& a, const Graph& b);
// G(n,p) with the documented splitmix64 stream: pairs scanned in lexicographic
// order, edge present iff the next 53-bit double is < p
Graph gnp(int n, double p, std::uint64_t seed);
// vertices are n-bit strings, edges join strings at Hamming distance n/2
Graph hadamard_graph(int n);

Report check_homomorphism(const Homomorphism& h);
Report check_homomorphism(const Graph& source, const Graph& target, const std::vector<int>& map);
Report verify_proper_colouring(const Graph& g, const ClassicalColouring& col);
// a proper colouring is exactly a homomorphism to K_c
Homomorphism colouring_to_homomorphism(const Graph& g, const ClassicalColouring& col);

bool is_connected(const Graph& g);

}  // namespace qchrom
