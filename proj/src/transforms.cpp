#include "qchrom/transforms.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <string>

#include "qchrom/errors.hpp"
#include "qchrom/linalg.hpp"

namespace qchrom {

namespace {

std::string edge_str(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

void require_pass(const VerifyReport& report, const char* what) {
    if (report.pass) return;
    std::ostringstream msg;
    msg << what << " does not verify (worst residual " << report.worst_residual;
    if (!report.violations.empty()) {
        const Violation& v = report.violations.front();
        msg << ", first violation " << v.kind << " at " << v.u;
        if (v.v >= 0) msg << "," << v.v;
    }
    msg << ")";
    throw VerificationError(msg.str());
}

}  // namespace

Matrix fourier_matrix(int c) {
    if (c < 1) throw InvalidInput("fourier matrix needs c >= 1");
    Matrix f(c, c);
    const double amp = 1.0 / std::sqrt(static_cast<double>(c));
    for (int k = 0; k < c; ++k)
        for (int j = 0; j < c; ++j)
            f(j, k) = std::polar(amp, 2.0 * std::numbers::pi * ((j * k) % c) / c);
    return f;
}

Rank1Cert classical_to_rank1(const Graph& g, const ClassicalColouring& col) {
    Report check = verify_proper_colouring(g, col);
    if (!check.pass) throw InvalidInput("improper colouring rejected: " + check.summary);
    const int c = col.c;
    const Matrix f = fourier_matrix(c);
    Rank1Cert cert{c, {}};
    cert.unitaries.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        const int k = col.colour[v];
        Matrix u(c, c);
        for (int j = 0; j < c; ++j) {
            // row j scaled by the phase x_j = exp(2*pi*i*k*j/c)
            const std::complex<double> x = std::polar(1.0, 2.0 * std::numbers::pi * ((k * j) % c) / c);
            for (int a = 0; a < c; ++a) u(j, a) = x * f(j, a);
        }
        cert.unitaries.push_back(std::move(u));
    }
    return cert;
}

Rank1Cert unit_modulus_rep_to_rank1(const Graph& g, const VectorRep& rep) {
    const int n = g.vertex_count();
    if (rep.count() != n) throw InvalidInput("representation size does not match vertex count");
    const int c = rep.dim();
    for (auto [u, w] : g.edges())
        if (!rep.orthogonal(u, w))
            throw InvalidInput("representation not orthogonal on edge " + edge_str(u, w));

    const Matrix f = fourier_matrix(c);
    Rank1Cert cert{c, {}};
    cert.unitaries.reserve(n);
    for (int v = 0; v < n; ++v) {
        // entries must share one modulus so the scaled vector is a pure phase
        const double m0 = std::abs(rep.entry_as_complex(v, 0));
        if (m0 <= 0.0) throw InvalidInput("zero entry in vector " + std::to_string(v));
        Matrix u(c, c);
        for (int j = 0; j < c; ++j) {
            const std::complex<double> e = rep.entry_as_complex(v, j);
            if (std::abs(std::abs(e) - m0) > 1e-9 * m0)
                throw InvalidInput("vector " + std::to_string(v) +
                                   " does not have constant entry modulus");
            const std::complex<double> x = e / m0;
            for (int a = 0; a < c; ++a) u(j, a) = x * f(j, a);
        }
        cert.unitaries.push_back(std::move(u));
    }
    return cert;
}

// ---------------------------------------------------------------------------
// Orthogonal designs. Entry (i, j) of the design matrix of v is
// sign[i][j] * v[index[i][j]]; each variable appears exactly once per row and
// column, so distinct design matrices built from orthogonal vectors have
// orthogonal same-index columns.

namespace {

struct ODTable {
    int n = 0;
    std::array<std::array<int, 8>, 8> index{};
    std::array<std::array<int, 8>, 8> sign{};
};

Matrix od_matrix(const ODTable& t, const std::vector<double>& v) {
    Matrix m(t.n, t.n);
    for (int j = 0; j < t.n; ++j)
        for (int i = 0; i < t.n; ++i) m(i, j) = t.sign[i][j] * v[t.index[i][j]];
    return m;
}

double design_residual(const ODTable& t, const std::vector<double>& v) {
    const Matrix m = od_matrix(t, v);
    double norm2 = 0.0;
    for (double x : v) norm2 += x * x;
    return (m * m.transpose() - std::complex<double>(norm2, 0.0) * Matrix::identity(t.n)).max_abs();
}

void check_design(const ODTable& t) {
    std::vector<double> probe(t.n);
    for (int i = 0; i < t.n; ++i) probe[i] = i + 1.0;  // generic: distinct entries
    if (design_residual(t, probe) > 1e-9)
        throw VerificationError("orthogonal design table failed its V V^T check");
}

ODTable make_od4() {
    ODTable t;
    t.n = 4;
    constexpr int idx[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    constexpr int sgn[4][4] = {{+1, +1, +1, +1}, {-1, +1, -1, +1}, {-1, +1, +1, -1}, {-1, -1, +1, +1}};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            t.index[i][j] = idx[i][j];
            t.sign[i][j] = sgn[i][j];
        }
    check_design(t);
    return t;
}

// Octonion left-multiplication table via the doubling construction over the
// quaternions: (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)).
ODTable make_od8() {
    // quaternion basis products: q[i][j] = (sign, index) with 1,i,j,k = 0..3
    struct SI { int s, k; };
    SI q[4][4];
    for (int j = 0; j < 4; ++j) q[0][j] = {+1, j};
    for (int i = 1; i < 4; ++i) q[i][0] = {+1, i};
    for (int i = 1; i < 4; ++i) q[i][i] = {-1, 0};
    q[1][2] = {+1, 3}; q[2][1] = {-1, 3};
    q[2][3] = {+1, 1}; q[3][2] = {-1, 1};
    q[3][1] = {+1, 2}; q[1][3] = {-1, 2};

    ODTable t;
    t.n = 8;
    std::array<std::array<int, 8>, 8> filled{};
    for (int i = 0; i < 8; ++i) {
        const int iq = i & 3, ih = i >> 2;
        for (int j = 0; j < 8; ++j) {
            const int jq = j & 3, jh = j >> 2;
            SI r;
            int out_half;
            if (ih == 0 && jh == 0) {
                r = q[iq][jq];
                out_half = 0;
            } else if (ih == 0 && jh == 1) {
                r = q[jq][iq];
                out_half = 1;
            } else if (ih == 1 && jh == 0) {
                r = q[iq][jq];
                if (jq != 0) r.s = -r.s;
                out_half = 1;
            } else {
                r = q[jq][iq];
                if (jq == 0) r.s = -r.s;
                out_half = 0;
            }
            const int row = out_half * 4 + r.k;
            if (filled[row][j])
                throw VerificationError("octonion table construction collided; not a design");
            filled[row][j] = 1;
            t.index[row][j] = i;
            t.sign[row][j] = r.s;
        }
    }
    check_design(t);
    return t;
}

const ODTable& od_table(int n) {
    static const ODTable t4 = make_od4();
    static const ODTable t8 = make_od8();
    if (n == 4) return t4;
    if (n == 8) return t8;
    throw InvalidInput("orthogonal designs exist here only for 4 and 8 variables");
}

}  // namespace

double od_design_residual(const std::vector<double>& v) {
    return design_residual(od_table(static_cast<int>(v.size())), v);
}

Rank1Cert real_rep_to_rank1_od(const Graph& g, const VectorRep& rep) {
    const int n = g.vertex_count();
    if (rep.count() != n) throw InvalidInput("representation size does not match vertex count");
    if (rep.dim() > 8)
        throw InvalidInput("design lift needs dimension <= 8, got " + std::to_string(rep.dim()));
    if (rep.backend() != Backend::IntegerReal && rep.backend() != Backend::ComplexFloat)
        throw InvalidInput("design lift needs a real representation");
    for (auto [u, w] : g.edges())
        if (!rep.orthogonal(u, w))
            throw InvalidInput("representation not orthogonal on edge " + edge_str(u, w));

    const int c = rep.dim() <= 4 ? 4 : 8;
    const ODTable& table = od_table(c);
    Rank1Cert cert{c, {}};
    cert.unitaries.reserve(n);
    for (int v = 0; v < n; ++v) {
        std::vector<double> x(c, 0.0);
        double norm2 = 0.0;
        for (int k = 0; k < rep.dim(); ++k) {
            const std::complex<double> e = rep.entry_as_complex(v, k);
            if (e.imag() != 0.0)
                throw InvalidInput("vector " + std::to_string(v) + " has a complex entry");
            x[k] = e.real();
            norm2 += x[k] * x[k];
        }
        if (norm2 <= 0.0) throw InvalidInput("zero vector at vertex " + std::to_string(v));
        const double inv = 1.0 / std::sqrt(norm2);
        for (double& e : x) e *= inv;
        cert.unitaries.push_back(od_matrix(table, x));
    }
    return cert;
}

VectorRep rank1_to_rep(const Graph& g, const Rank1Cert& cert) {
    require_pass(verify_rank1(g, cert), "rank-1 certificate");
    std::vector<std::vector<std::complex<double>>> vecs;
    vecs.reserve(cert.unitaries.size());
    for (const Matrix& u : cert.unitaries)
        vecs.emplace_back(u.col(0), u.col(0) + cert.c);
    return VectorRep::complex_float(std::move(vecs));
}

namespace {

void require_homomorphism(const Homomorphism& hom) {
    Report check = check_homomorphism(hom);
    if (!check.pass) throw InvalidInput("invalid homomorphism: " + check.summary);
}

}  // namespace

Rank1Cert pullback(const Homomorphism& hom, const Rank1Cert& cert) {
    require_homomorphism(hom);
    require_pass(verify_rank1(hom.target, cert), "rank-1 certificate");
    Rank1Cert out{cert.c, {}};
    out.unitaries.reserve(hom.map.size());
    for (int image : hom.map) out.unitaries.push_back(cert.unitaries[image]);
    return out;
}

ProjectorCert pullback(const Homomorphism& hom, const ProjectorCert& cert) {
    require_homomorphism(hom);
    require_pass(verify_projector(hom.target, cert), "projector certificate");
    ProjectorCert out{cert.c, cert.r, cert.d, {}};
    out.projectors.reserve(hom.map.size());
    for (int image : hom.map) out.projectors.push_back(cert.projectors[image]);
    return out;
}

GeneralCert pullback(const Homomorphism& hom, const GeneralCert& cert) {
    require_homomorphism(hom);
    require_pass(verify_general(hom.target, cert), "general certificate");
    GeneralCert out;
    out.dA = cert.dA;
    out.dB = cert.dB;
    out.state = cert.state;
    out.alice.reserve(hom.map.size());
    out.bob.reserve(hom.map.size());
    for (int image : hom.map) {
        out.alice.push_back(cert.alice[image]);
        out.bob.push_back(cert.bob[image]);
    }
    return out;
}

ProjectorCert rank1_to_projector(const Rank1Cert& cert) {
    ProjectorCert out{cert.c, 1, cert.c, {}};
    out.projectors.reserve(cert.unitaries.size());
    for (const Matrix& u : cert.unitaries) {
        std::vector<Matrix> list;
        list.reserve(cert.c);
        for (int a = 0; a < cert.c; ++a) {
            Matrix e(cert.c, cert.c);
            const auto* col = u.col(a);
            for (int j = 0; j < cert.c; ++j)
                for (int i = 0; i < cert.c; ++i) e(i, j) = col[i] * std::conj(col[j]);
            list.push_back(std::move(e));
        }
        out.projectors.push_back(std::move(list));
    }
    return out;
}

ProjectorCert tensor_union(const Graph& g, const Graph& h, const ProjectorCert& cg,
                           const ProjectorCert& ch) {
    if (g.vertex_count() != h.vertex_count())
        throw InvalidInput("tensor union needs graphs on the same vertex set");
    require_pass(verify_projector(g, cg), "first projector certificate");
    require_pass(verify_projector(h, ch), "second projector certificate");
    ProjectorCert out{cg.c * ch.c, cg.r * ch.r, cg.d * ch.d, {}};
    out.projectors.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<Matrix> list;
        list.reserve(out.c);
        for (int a = 0; a < cg.c; ++a)
            for (int b = 0; b < ch.c; ++b)
                list.push_back(kron(cg.projectors[v][a], ch.projectors[v][b]));
        out.projectors.push_back(std::move(list));
    }
    return out;
}

ProjectorCert equalize_ranks(const Graph& g, const MixedMeasurements& input) {
    const int n = g.vertex_count();
    const int c = input.c, d = input.d;
    if (c < 1 || d < 1) throw InvalidInput("colour count and dimension must be positive");
    if (static_cast<int>(input.ops.size()) != n)
        throw InvalidInput("measurement list does not cover all vertices");
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(input.ops[v].size()) != c)
            throw InvalidInput("vertex " + std::to_string(v) + " has " +
                               std::to_string(input.ops[v].size()) + " operators, expected " +
                               std::to_string(c));
        Matrix sum = Matrix::zero(d, d);
        for (int a = 0; a < c; ++a) {
            const Matrix& e = input.ops[v][a];
            if (e.rows() != d || e.cols() != d)
                throw InvalidInput("operator shape mismatch at vertex " + std::to_string(v));
            if (hermiticity_residual(e) > kCertTolerance || (e * e - e).max_abs() > kCertTolerance)
                throw InvalidInput("operator at vertex " + std::to_string(v) + " colour " +
                                   std::to_string(a) + " is not a projector");
            sum = sum + e;
        }
        if ((sum - Matrix::identity(d)).max_abs() > kCertTolerance)
            throw InvalidInput("incomplete measurement at vertex " + std::to_string(v));
    }
    for (auto [u, w] : g.edges())
        for (int a = 0; a < c; ++a)
            if ((input.ops[u][a] * input.ops[w][a]).max_abs() > kCertTolerance)
                throw InvalidInput("measurements not orthogonal on edge " + edge_str(u, w) +
                                   " colour " + std::to_string(a));

    ProjectorCert out{c, d, d * c, {}};
    out.projectors.reserve(n);
    for (int v = 0; v < n; ++v) {
        std::vector<Matrix> list;
        list.reserve(c);
        for (int a = 0; a < c; ++a) {
            Matrix e(d * c, d * c);  // throws if d*c exceeds the dimension cap
            for (int i = 0; i < c; ++i) {
                const Matrix& block = input.ops[v][(a + i) % c];
                for (int col = 0; col < d; ++col)
                    for (int row = 0; row < d; ++row)
                        e(row * c + i, col * c + i) = block(row, col);
            }
            list.push_back(std::move(e));
        }
        out.projectors.push_back(std::move(list));
    }
    return out;
}

NormalFormResult normal_form(const Graph& g, const GeneralCert& cert) {
    NormalFormResult result;
    result.input_report = verify_general(g, cert);
    if (!result.input_report.pass) return result;

    const int c = general_colour_count(cert);
    const int n = g.vertex_count();

    Matrix psi(cert.dA, cert.dB);
    for (int j = 0; j < cert.dA; ++j)
        for (int l = 0; l < cert.dB; ++l)
            psi(j, l) = cert.state[static_cast<std::size_t>(j) * cert.dB + l];

    // Schmidt restriction: keep singular directions whose weight sigma^2
    // clears the same relative threshold used for support extraction.
    const Svd schmidt = svd(psi);
    const double top = schmidt.singular_values.front() * schmidt.singular_values.front();
    const double thr = kRankRelTol * top;
    int s = 0;
    for (double sig : schmidt.singular_values) {
        const double lam = sig * sig;
        if (lam > thr / kRankAmbiguity && lam < thr * kRankAmbiguity)
            throw VerificationError("numerically ambiguous Schmidt rank: weight " +
                                    std::to_string(lam) + " sits at the restriction threshold");
        if (lam > thr) ++s;
    }
    result.schmidt_rank = s;

    Matrix v_s(cert.dB, s);
    for (int i = 0; i < s; ++i)
        for (int r = 0; r < cert.dB; ++r) v_s(r, i) = schmidt.v(r, i);
    Matrix delta(s, s), rho(s, s);
    for (int i = 0; i < s; ++i) {
        delta(i, i) = schmidt.singular_values[i];
        rho(i, i) = schmidt.singular_values[i] * schmidt.singular_values[i];
    }

    std::vector<std::vector<Matrix>> supports(n);
    int first_rank = -1;
    bool mixed = false;
    for (int v = 0; v < n; ++v) {
        supports[v].reserve(c);
        for (int a = 0; a < c; ++a) {
            // Bob's operator in his Schmidt basis (columns of conj(V))
            const Matrix f_res = dagger_mul(v_s.conjugate(), cert.bob[v][a] * v_s.conjugate());
            const SupportResult sup = support_projector(delta * f_res.transpose() * delta);
            result.max_conj_residual = std::max(
                result.max_conj_residual, (f_res - sup.projector.conjugate()).max_abs());
            result.max_commutation_residual = std::max(
                result.max_commutation_residual,
                (rho * sup.projector - sup.projector * rho).max_abs());
            if (first_rank < 0) first_rank = sup.rank;
            if (sup.rank != first_rank) mixed = true;
            supports[v].push_back(sup.projector);
        }
    }
    if (result.max_conj_residual > kCertTolerance)
        throw VerificationError(
            "operators on the second side are not conjugate supports (residual " +
            std::to_string(result.max_conj_residual) + ")");

    if (!mixed && first_rank * c == s) {
        result.cert = ProjectorCert{c, first_rank, s, std::move(supports)};
    } else {
        result.cert = equalize_ranks(g, MixedMeasurements{c, s, std::move(supports)});
        result.equalized = true;
    }
    result.ok = true;
    return result;
}

ClassicalColouring extract_classical_3col(const Graph& g, const Rank1Cert& cert) {
    if (cert.c != 3) throw InvalidInput("classical extraction is defined for 3-colour certificates");
    if (!is_connected(g)) throw InvalidInput("classical extraction needs a connected graph");
    require_pass(verify_rank1(g, cert), "rank-1 certificate");

    const int n = g.vertex_count();
    ClassicalColouring col{3, std::vector<int>(n, -1)};
    for (int v = 0; v < n; ++v) {
        // gauge so that vertex 0 carries the identity
        const Matrix w = dagger_mul(cert.unitaries[0], cert.unitaries[v]);
        int row_hits[3] = {0, 0, 0};
        int col0_row = -1;
        for (int j = 0; j < 3; ++j) {
            int hits = 0;
            for (int i = 0; i < 3; ++i) {
                const double m = std::abs(w(i, j));
                if (m >= kPermHigh) {
                    ++hits;
                    ++row_hits[i];
                    if (j == 0) col0_row = i;
                } else if (m > kPermLow) {
                    throw VerificationError(
                        "unitary at vertex " + std::to_string(v) +
                        " is not a phased permutation within tolerance (entry modulus " +
                        std::to_string(m) + "): numerical noise or invalid certificate");
                }
            }
            if (hits != 1)
                throw VerificationError("unitary at vertex " + std::to_string(v) +
                                        " is not a phased permutation within tolerance");
        }
        for (int i = 0; i < 3; ++i)
            if (row_hits[i] != 1)
                throw VerificationError("unitary at vertex " + std::to_string(v) +
                                        " is not a phased permutation within tolerance");
        col.colour[v] = col0_row;
    }
    Report check = verify_proper_colouring(g, col);
    if (!check.pass)
        throw VerificationError("extracted colouring is improper: " + check.summary);
    return col;
}

double upper_bound_report(int k) {
    if (k < 1) throw InvalidInput("bound is defined for k >= 1");
    if (k > 100) throw InvalidInput("overflow: bound grows astronomically, k capped at 100");
    return std::pow(1.0 + 2.0 * std::sqrt(2.0), 2.0 * k);
}

}  // namespace qchrom
