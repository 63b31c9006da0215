#include "qchrom/vecrep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "json.hpp"
#include "qchrom/errors.hpp"
#include "qchrom/io.hpp"

namespace qchrom {

using nlohmann::json;

std::string backend_name(Backend b) {
    switch (b) {
        case Backend::IntegerReal: return "int";
        case Backend::GaussianInteger: return "gauss";
        case Backend::RootOfUnityExponent: return "rootexp";
        case Backend::ComplexFloat: return "float";
    }
    throw InvalidInput("unknown backend");
}

Backend backend_from_name(const std::string& s) {
    if (s == "int") return Backend::IntegerReal;
    if (s == "gauss") return Backend::GaussianInteger;
    if (s == "rootexp") return Backend::RootOfUnityExponent;
    if (s == "float") return Backend::ComplexFloat;
    throw InvalidInput("unknown backend name: " + s);
}

namespace {

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::complex<double> root_of_unity(int exp, int order) {
    const double ang = 2.0 * std::numbers::pi * exp / order;
    return {std::cos(ang), std::sin(ang)};
}

}  // namespace

bool InnerProductValue::is_zero(double tol) const {
    switch (backend) {
        case Backend::IntegerReal:
            return int_value == 0;
        case Backend::GaussianInteger:
            return gauss_value.re == 0 && gauss_value.im == 0;
        case Backend::RootOfUnityExponent: {
            // prime order: sum_j a_j zeta^j = 0 iff all a_j equal
            for (std::size_t j = 1; j < root_counts.size(); ++j)
                if (root_counts[j] != root_counts[0]) return false;
            return true;
        }
        case Backend::ComplexFloat:
            return std::abs(float_value) <= tol;
    }
    return false;
}

std::complex<double> InnerProductValue::approx() const {
    switch (backend) {
        case Backend::IntegerReal:
            return {static_cast<double>(int_value), 0.0};
        case Backend::GaussianInteger:
            return {static_cast<double>(gauss_value.re), static_cast<double>(gauss_value.im)};
        case Backend::RootOfUnityExponent: {
            std::complex<double> s = 0.0;
            const int m = static_cast<int>(root_counts.size());
            for (int j = 0; j < m; ++j)
                s += static_cast<double>(root_counts[j]) * root_of_unity(j, m);
            return s;
        }
        case Backend::ComplexFloat:
            return float_value;
    }
    return 0.0;
}

VectorRep VectorRep::integer_real(std::vector<std::vector<long long>> vecs) {
    VectorRep r;
    r.backend_ = Backend::IntegerReal;
    if (vecs.empty()) throw InvalidInput("rep needs at least one vector");
    r.dim_ = static_cast<int>(vecs[0].size());
    if (r.dim_ == 0) throw InvalidInput("rep needs positive dimension");
    for (const auto& v : vecs) {
        if (static_cast<int>(v.size()) != r.dim_)
            throw InvalidInput("all vectors must share the dimension");
        if (std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; }))
            throw InvalidInput("zero vector is not allowed in a representation");
    }
    r.ints_ = std::move(vecs);
    return r;
}

VectorRep VectorRep::gaussian(std::vector<std::vector<GaussInt>> vecs) {
    VectorRep r;
    r.backend_ = Backend::GaussianInteger;
    if (vecs.empty()) throw InvalidInput("rep needs at least one vector");
    r.dim_ = static_cast<int>(vecs[0].size());
    if (r.dim_ == 0) throw InvalidInput("rep needs positive dimension");
    for (const auto& v : vecs) {
        if (static_cast<int>(v.size()) != r.dim_)
            throw InvalidInput("all vectors must share the dimension");
        if (std::all_of(v.begin(), v.end(),
                        [](const GaussInt& x) { return x.re == 0 && x.im == 0; }))
            throw InvalidInput("zero vector is not allowed in a representation");
    }
    r.gauss_ = std::move(vecs);
    return r;
}

VectorRep VectorRep::root_exponent(int order, std::vector<std::vector<int>> exps) {
    if (!is_prime(order))
        throw InvalidInput("root-of-unity backend needs a prime order (exact zero test)");
    VectorRep r;
    r.backend_ = Backend::RootOfUnityExponent;
    r.order_ = order;
    if (exps.empty()) throw InvalidInput("rep needs at least one vector");
    r.dim_ = static_cast<int>(exps[0].size());
    if (r.dim_ == 0) throw InvalidInput("rep needs positive dimension");
    for (const auto& v : exps) {
        if (static_cast<int>(v.size()) != r.dim_)
            throw InvalidInput("all vectors must share the dimension");
        for (int e : v)
            if (e < 0 || e >= order) throw InvalidInput("exponent out of range");
        // entries have modulus one, zero vector impossible by construction
    }
    r.exps_ = std::move(exps);
    return r;
}

VectorRep VectorRep::complex_float(std::vector<std::vector<std::complex<double>>> vecs) {
    VectorRep r;
    r.backend_ = Backend::ComplexFloat;
    if (vecs.empty()) throw InvalidInput("rep needs at least one vector");
    r.dim_ = static_cast<int>(vecs[0].size());
    if (r.dim_ == 0) throw InvalidInput("rep needs positive dimension");
    for (const auto& v : vecs) {
        if (static_cast<int>(v.size()) != r.dim_)
            throw InvalidInput("all vectors must share the dimension");
        double n2 = 0.0;
        for (auto z : v) {
            if (std::isnan(z.real()) || std::isnan(z.imag()))
                throw InvalidInput("NaN entry in vector");
            n2 += std::norm(z);
        }
        if (n2 == 0.0) throw InvalidInput("zero vector is not allowed in a representation");
    }
    r.floats_ = std::move(vecs);
    return r;
}

int VectorRep::count() const {
    switch (backend_) {
        case Backend::IntegerReal: return static_cast<int>(ints_.size());
        case Backend::GaussianInteger: return static_cast<int>(gauss_.size());
        case Backend::RootOfUnityExponent: return static_cast<int>(exps_.size());
        case Backend::ComplexFloat: return static_cast<int>(floats_.size());
    }
    return 0;
}

void VectorRep::check_index(int v) const {
    if (v < 0 || v >= count()) throw InvalidInput("vector index out of range");
}

InnerProductValue VectorRep::inner_product(int x, int y) const {
    check_index(x);
    check_index(y);
    InnerProductValue out;
    out.backend = backend_;
    switch (backend_) {
        case Backend::IntegerReal: {
            long long s = 0;
            for (int k = 0; k < dim_; ++k) s += ints_[x][k] * ints_[y][k];
            out.int_value = s;
            break;
        }
        case Backend::GaussianInteger: {
            GaussInt s;
            for (int k = 0; k < dim_; ++k) {
                const GaussInt& a = gauss_[x][k];  // conjugated
                const GaussInt& b = gauss_[y][k];
                s.re += a.re * b.re + a.im * b.im;
                s.im += a.re * b.im - a.im * b.re;
            }
            out.gauss_value = s;
            break;
        }
        case Backend::RootOfUnityExponent: {
            out.root_counts.assign(static_cast<std::size_t>(order_), 0);
            for (int k = 0; k < dim_; ++k) {
                int d = exps_[y][k] - exps_[x][k];
                d %= order_;
                if (d < 0) d += order_;
                ++out.root_counts[static_cast<std::size_t>(d)];
            }
            break;
        }
        case Backend::ComplexFloat: {
            std::complex<double> s = 0.0;
            for (int k = 0; k < dim_; ++k) s += std::conj(floats_[x][k]) * floats_[y][k];
            out.float_value = s;
            break;
        }
    }
    return out;
}

bool VectorRep::orthogonal(int x, int y, double tol) const {
    return inner_product(x, y).is_zero(tol);
}

Graph VectorRep::orthogonality_graph(double tol) const {
    const int n = count();
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (orthogonal(x, y, tol)) edges.emplace_back(x, y);
    return Graph(n, std::move(edges));
}

std::complex<double> VectorRep::entry_as_complex(int v, int k) const {
    check_index(v);
    if (k < 0 || k >= dim_) throw InvalidInput("entry index out of range");
    switch (backend_) {
        case Backend::IntegerReal: return {static_cast<double>(ints_[v][k]), 0.0};
        case Backend::GaussianInteger:
            return {static_cast<double>(gauss_[v][k].re), static_cast<double>(gauss_[v][k].im)};
        case Backend::RootOfUnityExponent: return root_of_unity(exps_[v][k], order_);
        case Backend::ComplexFloat: return floats_[v][k];
    }
    return 0.0;
}

double VectorRep::norm_squared(int v) const {
    check_index(v);
    double s = 0.0;
    for (int k = 0; k < dim_; ++k) s += std::norm(entry_as_complex(v, k));
    return s;
}

const std::vector<std::vector<long long>>& VectorRep::int_vectors() const {
    if (backend_ != Backend::IntegerReal) throw InvalidInput("backend mismatch");
    return ints_;
}
const std::vector<std::vector<GaussInt>>& VectorRep::gauss_vectors() const {
    if (backend_ != Backend::GaussianInteger) throw InvalidInput("backend mismatch");
    return gauss_;
}
const std::vector<std::vector<int>>& VectorRep::exponent_vectors() const {
    if (backend_ != Backend::RootOfUnityExponent) throw InvalidInput("backend mismatch");
    return exps_;
}
const std::vector<std::vector<std::complex<double>>>& VectorRep::float_vectors() const {
    if (backend_ != Backend::ComplexFloat) throw InvalidInput("backend mismatch");
    return floats_;
}

std::pair<Graph, VectorRep> roots_of_unity_graph(int p) {
    if (!is_prime(p)) throw InvalidInput("roots_of_unity_graph needs a prime p");
    if (p > 5) throw InvalidInput("size guard: p^p vertices, refusing p > 5");
    long long total = 1;
    for (int i = 0; i < p; ++i) total *= p;
    std::vector<std::vector<int>> exps;
    exps.reserve(static_cast<std::size_t>(total));
    // lexicographic exponent order, first entry most significant
    for (long long idx = 0; idx < total; ++idx) {
        std::vector<int> v(static_cast<std::size_t>(p));
        long long rem = idx;
        for (int k = p - 1; k >= 0; --k) {
            v[static_cast<std::size_t>(k)] = static_cast<int>(rem % p);
            rem /= p;
        }
        exps.push_back(std::move(v));
    }
    VectorRep rep = VectorRep::root_exponent(p, std::move(exps));
    Graph g = rep.orthogonality_graph();
    return {std::move(g), std::move(rep)};
}

ClassicalColouring roots_of_unity_colouring(int p) {
    if (!is_prime(p)) throw InvalidInput("roots_of_unity_colouring needs a prime p");
    if (p > 5) throw InvalidInput("size guard: p^p vertices, refusing p > 5");
    long long total = 1;
    for (int i = 0; i < p; ++i) total *= p;
    ClassicalColouring col;
    col.c = p;
    col.colour.reserve(static_cast<std::size_t>(total));
    for (long long idx = 0; idx < total; ++idx) {
        long long rem = idx;
        std::vector<int> v(static_cast<std::size_t>(p));
        for (int k = p - 1; k >= 0; --k) {
            v[static_cast<std::size_t>(k)] = static_cast<int>(rem % p);
            rem /= p;
        }
        int d = (v[0] - v[1]) % p;
        if (d < 0) d += p;
        col.colour.push_back(d);
    }
    return col;
}

std::pair<Graph, VectorRep> fourth_roots_dim4_graph() {
    // i^e as a Gaussian integer
    auto ipow = [](int e) -> GaussInt {
        switch (e & 3) {
            case 0: return {1, 0};
            case 1: return {0, 1};
            case 2: return {-1, 0};
            default: return {0, -1};
        }
    };
    std::vector<std::vector<GaussInt>> vecs;
    vecs.reserve(64);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                vecs.push_back({GaussInt{1, 0}, ipow(a), ipow(b), ipow(c)});
    VectorRep rep = VectorRep::gaussian(std::move(vecs));
    Graph g = rep.orthogonality_graph();
    return {std::move(g), std::move(rep)};
}

VectorRep hadamard_pm_rep(int n) {
    if (n <= 0 || n > 20) throw InvalidInput("hadamard rep needs 1 <= n <= 20");
    const std::uint32_t count = std::uint32_t{1} << n;
    std::vector<std::vector<long long>> vecs;
    vecs.reserve(count);
    for (std::uint32_t u = 0; u < count; ++u) {
        std::vector<long long> v(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            v[static_cast<std::size_t>(k)] = ((u >> (n - 1 - k)) & 1) ? -1 : 1;
        vecs.push_back(std::move(v));
    }
    return VectorRep::integer_real(std::move(vecs));
}

VectorRep vectors_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InvalidInput(std::string("vector json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dim") || !j.contains("backend") || !j.contains("vectors"))
        throw InvalidInput("vector json needs fields 'dim', 'backend', 'vectors'");
    const int dim = j.at("dim").get<int>();
    const Backend b = backend_from_name(j.at("backend").get<std::string>());
    const auto& jv = j.at("vectors");
    auto expect_len = [&](const json& row) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw InvalidInput("vector json: row length disagrees with dim");
    };
    switch (b) {
        case Backend::IntegerReal: {
            std::vector<std::vector<long long>> vecs;
            for (const auto& row : jv) {
                expect_len(row);
                std::vector<long long> v;
                for (const auto& x : row) v.push_back(x.get<long long>());
                vecs.push_back(std::move(v));
            }
            return VectorRep::integer_real(std::move(vecs));
        }
        case Backend::GaussianInteger: {
            std::vector<std::vector<GaussInt>> vecs;
            for (const auto& row : jv) {
                expect_len(row);
                std::vector<GaussInt> v;
                for (const auto& x : row) {
                    if (!x.is_array() || x.size() != 2)
                        throw InvalidInput("gauss entries are [re,im] integer pairs");
                    v.push_back(GaussInt{x[0].get<long long>(), x[1].get<long long>()});
                }
                vecs.push_back(std::move(v));
            }
            return VectorRep::gaussian(std::move(vecs));
        }
        case Backend::RootOfUnityExponent: {
            if (!j.contains("order")) throw InvalidInput("rootexp backend needs 'order'");
            const int order = j.at("order").get<int>();
            std::vector<std::vector<int>> vecs;
            for (const auto& row : jv) {
                expect_len(row);
                std::vector<int> v;
                for (const auto& x : row) v.push_back(x.get<int>());
                vecs.push_back(std::move(v));
            }
            return VectorRep::root_exponent(order, std::move(vecs));
        }
        case Backend::ComplexFloat: {
            std::vector<std::vector<std::complex<double>>> vecs;
            for (const auto& row : jv) {
                expect_len(row);
                std::vector<std::complex<double>> v;
                for (const auto& x : row) {
                    if (!x.is_array() || x.size() != 2)
                        throw InvalidInput("float entries are [re,im] pairs");
                    v.emplace_back(x[0].get<double>(), x[1].get<double>());
                }
                vecs.push_back(std::move(v));
            }
            return VectorRep::complex_float(std::move(vecs));
        }
    }
    throw InvalidInput("unreachable backend");
}

std::string vectors_to_json_text(const VectorRep& rep) {
    json j;
    j["dim"] = rep.dim();
    j["backend"] = backend_name(rep.backend());
    if (rep.backend() == Backend::RootOfUnityExponent) j["order"] = rep.order();
    json rows = json::array();
    for (int v = 0; v < rep.count(); ++v) {
        json row = json::array();
        for (int k = 0; k < rep.dim(); ++k) {
            switch (rep.backend()) {
                case Backend::IntegerReal: row.push_back(rep.int_vectors()[v][k]); break;
                case Backend::GaussianInteger: {
                    const auto& g = rep.gauss_vectors()[v][k];
                    row.push_back(json::array({g.re, g.im}));
                    break;
                }
                case Backend::RootOfUnityExponent:
                    row.push_back(rep.exponent_vectors()[v][k]);
                    break;
                case Backend::ComplexFloat: {
                    const auto z = rep.float_vectors()[v][k];
                    row.push_back(json::array({z.real(), z.imag()}));
                    break;
                }
            }
        }
        rows.push_back(std::move(row));
    }
    j["vectors"] = std::move(rows);
    return j.dump();
}

VectorRep load_vectors_file(const std::string& path) {
    return vectors_from_json_text(read_file(path));
}

}  // namespace qchrom
