#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qchrom/graph.hpp"

namespace qchrom {

inline constexpr double kOrthTolerance = 1e-9;

enum class Backend { IntegerReal, GaussianInteger, RootOfUnityExponent, ComplexFloat };

std::string backend_name(Backend b);       // "int" | "gauss" | "rootexp" | "float"
Backend backend_from_name(const std::string& s);

struct GaussInt {
    long long re = 0, im = 0;
    bool operator==(const GaussInt&) const = default;
};

// Inner product value, conjugate-linear in the first argument. For the
// root-of-unity backend the value is kept as the multiset of exponent counts,
// sum_j counts[j] * zeta^j, so the zero test stays exact: for prime order the
// sum vanishes iff all counts are equal (the minimal polynomial of zeta is
// 1 + x + ... + x^{p-1}).
struct InnerProductValue {
    Backend backend = Backend::ComplexFloat;
    long long int_value = 0;
    GaussInt gauss_value;
    std::vector<long long> root_counts;
    std::complex<double> float_value;

    bool is_zero(double tol = kOrthTolerance) const;
    std::complex<double> approx() const;  // numeric view, for display only
};

// Vertex-indexed family of nonzero vectors sharing one ambient dimension and
// one scalar backend. Exact backends never touch floating arithmetic when
// building orthogonality graphs.
class VectorRep {
  public:
    static VectorRep integer_real(std::vector<std::vector<long long>> vecs);
    static VectorRep gaussian(std::vector<std::vector<GaussInt>> vecs);
    // order must be prime: the exact zero test relies on it
    static VectorRep root_exponent(int order, std::vector<std::vector<int>> exps);
    static VectorRep complex_float(std::vector<std::vector<std::complex<double>>> vecs);

    Backend backend() const { return backend_; }
    int dim() const { return dim_; }
    int count() const;
    int order() const { return order_; }

    InnerProductValue inner_product(int x, int y) const;
    bool orthogonal(int x, int y, double tol = kOrthTolerance) const;
    Graph orthogonality_graph(double tol = kOrthTolerance) const;

    std::complex<double> entry_as_complex(int v, int k) const;
    // squared Euclidean norm as a float (exact backends: exact integer cast)
    double norm_squared(int v) const;

    const std::vector<std::vector<long long>>& int_vectors() const;
    const std::vector<std::vector<GaussInt>>& gauss_vectors() const;
    const std::vector<std::vector<int>>& exponent_vectors() const;
    const std::vector<std::vector<std::complex<double>>>& float_vectors() const;

  private:
    VectorRep() = default;
    Backend backend_ = Backend::ComplexFloat;
    int dim_ = 0;
    int order_ = 0;
    std::vector<std::vector<long long>> ints_;
    std::vector<std::vector<GaussInt>> gauss_;
    std::vector<std::vector<int>> exps_;
    std::vector<std::vector<std::complex<double>>> floats_;
    void check_index(int v) const;
};

// All p^p vectors of C^p with p-th root of unity entries, lexicographic
// exponent order; edge iff the entries of conj(x) .* y are all distinct.
std::pair<Graph, VectorRep> roots_of_unity_graph(int p);

// colour(x) = (x_0 - x_1) mod p; proper p-colouring of the graph above
ClassicalColouring roots_of_unity_colouring(int p);

// The 64 vectors (1, i^a, i^b, i^c), lexicographic in (a,b,c); exact
// Gaussian-integer orthogonality.
std::pair<Graph, VectorRep> fourth_roots_dim4_graph();

// +-1 vectors of all n-bit strings in lexicographic order; vertex order
// matches hadamard_graph(n) and adjacency there implies orthogonality here.
VectorRep hadamard_pm_rep(int n);

// JSON vector file:
// {"dim": int, "backend": "gauss"|"rootexp"|"int"|"float", "order": int?,
//  "vectors": [[entry,...],...]}
VectorRep vectors_from_json_text(const std::string& text);
std::string vectors_to_json_text(const VectorRep& rep);
VectorRep load_vectors_file(const std::string& path);

}  // namespace qchrom
