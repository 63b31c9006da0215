#include "qchrom/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qchrom/errors.hpp"
#include "qchrom/kernels.hpp"
#include "qchrom/linalg.hpp"

namespace qchrom {

namespace {

void note_residual(VerifyReport& report, double res, double tol, Violation v) {
    report.worst_residual = std::max(report.worst_residual, res);
    if (res > tol) {
        v.residual = res;
        report.violations.push_back(std::move(v));
        report.pass = false;
    }
}

// eigenvalues of an (approximate) projector cluster at 0 and 1
int projector_rank(const Matrix& e) {
    int rank = 0;
    for (double lam : hermitian_eigenvalues(e))
        if (lam > 0.5) ++rank;
    return rank;
}

}  // namespace

VerifyReport verify_rank1(const Graph& g, const Rank1Cert& cert, double tol) {
    const int n = g.vertex_count();
    if (static_cast<int>(cert.unitaries.size()) != n)
        throw InvalidInput("certificate covers " + std::to_string(cert.unitaries.size()) +
                           " vertices, graph has " + std::to_string(n));
    if (cert.c < 1) throw InvalidInput("certificate needs at least one colour");
    for (int v = 0; v < n; ++v) {
        const Matrix& u = cert.unitaries[v];
        if (u.rows() != u.cols()) throw InvalidInput("non-square matrix at vertex " + std::to_string(v));
        if (u.rows() != cert.c)
            throw InvalidInput("matrix dimension " + std::to_string(u.rows()) + " at vertex " +
                               std::to_string(v) + " does not match colour count " + std::to_string(cert.c));
    }

    VerifyReport report;
    for (int v = 0; v < n; ++v)
        note_residual(report, unitarity_residual(cert.unitaries[v]), tol,
                      {"unitarity", v, -1, -1, -1, 0.0, {}});
    const auto nc = static_cast<std::size_t>(cert.c);
    for (auto [u, w] : g.edges())
        for (int a = 0; a < cert.c; ++a) {
            // (U_u^dagger U_w)_{aa} = <column a of U_u, column a of U_w>
            const double res = std::abs(kern::cdot(cert.unitaries[u].col(a), cert.unitaries[w].col(a), nc));
            note_residual(report, res, tol, {"edge-diagonal", u, w, a, a, 0.0, {}});
        }
    return report;
}

VerifyReport verify_projector(const Graph& g, const ProjectorCert& cert, double tol) {
    const int n = g.vertex_count();
    if (static_cast<int>(cert.projectors.size()) != n)
        throw InvalidInput("certificate covers " + std::to_string(cert.projectors.size()) +
                           " vertices, graph has " + std::to_string(n));
    if (cert.c < 1 || cert.r < 1) throw InvalidInput("colour count and rank must be positive");
    if (cert.d != cert.r * cert.c)
        throw InvalidInput("declared dimension " + std::to_string(cert.d) + " is not rank*colours = " +
                           std::to_string(cert.r * cert.c));
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(cert.projectors[v].size()) != cert.c)
            throw InvalidInput("vertex " + std::to_string(v) + " has " +
                               std::to_string(cert.projectors[v].size()) + " projectors, expected " +
                               std::to_string(cert.c));
        for (const Matrix& e : cert.projectors[v])
            if (e.rows() != cert.d || e.cols() != cert.d)
                throw InvalidInput("projector shape mismatch at vertex " + std::to_string(v));
    }

    VerifyReport report;
    for (int v = 0; v < n; ++v) {
        Matrix sum = Matrix::zero(cert.d, cert.d);
        for (int a = 0; a < cert.c; ++a) {
            const Matrix& e = cert.projectors[v][a];
            note_residual(report, hermiticity_residual(e), tol, {"hermiticity", v, -1, a, -1, 0.0, {}});
            note_residual(report, (e * e - e).max_abs(), tol, {"idempotency", v, -1, a, -1, 0.0, {}});
            const int rank = projector_rank(e);
            note_residual(report, std::abs(rank - cert.r), tol,
                          {"rank", v, -1, a, -1, 0.0,
                           "rank " + std::to_string(rank) + ", declared " + std::to_string(cert.r)});
            sum = sum + e;
        }
        note_residual(report, (sum - Matrix::identity(cert.d)).max_abs(), tol,
                      {"completeness", v, -1, -1, -1, 0.0, {}});
    }
    for (auto [u, w] : g.edges())
        for (int a = 0; a < cert.c; ++a)
            note_residual(report, (cert.projectors[u][a] * cert.projectors[w][a]).max_abs(), tol,
                          {"edge-orthogonality", u, w, a, a, 0.0, {}});
    return report;
}

int general_colour_count(const GeneralCert& cert) {
    if (cert.alice.empty()) throw InvalidInput("certificate has no vertices");
    return static_cast<int>(cert.alice[0].size());
}

VerifyReport verify_general(const Graph& g, const GeneralCert& cert, double tol) {
    const int n = g.vertex_count();
    if (static_cast<int>(cert.alice.size()) != n || static_cast<int>(cert.bob.size()) != n)
        throw InvalidInput("certificate does not cover all vertices");
    if (cert.dA < 1 || cert.dB < 1) throw InvalidInput("local dimensions must be positive");
    if (static_cast<int>(cert.state.size()) != cert.dA * cert.dB)
        throw InvalidInput("state has dimension " + std::to_string(cert.state.size()) +
                           ", expected dA*dB = " + std::to_string(cert.dA * cert.dB));
    const int c = general_colour_count(cert);
    if (c < 1) throw InvalidInput("certificate needs at least one outcome");
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(cert.alice[v].size()) != c || static_cast<int>(cert.bob[v].size()) != c)
            throw InvalidInput("outcome count mismatch at vertex " + std::to_string(v));
        for (const Matrix& e : cert.alice[v])
            if (e.rows() != cert.dA || e.cols() != cert.dA)
                throw InvalidInput("alice operator shape mismatch at vertex " + std::to_string(v));
        for (const Matrix& f : cert.bob[v])
            if (f.rows() != cert.dB || f.cols() != cert.dB)
                throw InvalidInput("bob operator shape mismatch at vertex " + std::to_string(v));
    }

    VerifyReport report;
    double norm2 = 0.0;
    for (const auto& z : cert.state) norm2 += std::norm(z);
    note_residual(report, std::abs(std::sqrt(norm2) - 1.0), tol, {"state-norm", -1, -1, -1, -1, 0.0, {}});

    // the state as a dA x dB matrix: Psi(j, l) = state[j*dB + l]
    Matrix psi(cert.dA, cert.dB);
    for (int j = 0; j < cert.dA; ++j)
        for (int l = 0; l < cert.dB; ++l) psi(j, l) = cert.state[static_cast<std::size_t>(j) * cert.dB + l];

    auto check_povm = [&](const std::vector<std::vector<Matrix>>& fam, int dim, const char* side) {
        for (int v = 0; v < n; ++v) {
            Matrix sum = Matrix::zero(dim, dim);
            for (int a = 0; a < c; ++a) {
                const Matrix& e = fam[v][a];
                note_residual(report, hermiticity_residual(e), tol, {"hermiticity", v, -1, a, -1, 0.0, side});
                const auto eig = hermitian_eigenvalues(e);
                const double neg = eig.empty() ? 0.0 : std::max(0.0, -eig.front());
                note_residual(report, neg, tol, {"positivity", v, -1, a, -1, 0.0, side});
                sum = sum + e;
            }
            note_residual(report, (sum - Matrix::identity(dim)).max_abs(), tol,
                          {"completeness", v, -1, -1, -1, 0.0, side});
        }
    };
    check_povm(cert.alice, cert.dA, "alice");
    check_povm(cert.bob, cert.dB, "bob");

    // <psi| E (x) F |psi> = sum_{l,l'} (Psi^dagger E Psi)_{l,l'} F_{l,l'}
    auto correlation = [&](const Matrix& e, const Matrix& f) {
        const Matrix m = dagger_mul(psi, e * psi);  // Psi^dagger E Psi
        std::complex<double> s = 0.0;
        for (int l2 = 0; l2 < cert.dB; ++l2)
            for (int l1 = 0; l1 < cert.dB; ++l1) s += m(l1, l2) * f(l1, l2);
        return std::abs(s);
    };

    for (int v = 0; v < n; ++v)
        for (int a = 0; a < c; ++a)
            for (int b = 0; b < c; ++b) {
                if (a == b) continue;
                note_residual(report, correlation(cert.alice[v][a], cert.bob[v][b]), tol,
                              {"consistency", v, -1, a, b, 0.0, {}});
            }
    for (auto [u, w] : g.edges())
        for (int a = 0; a < c; ++a)
            note_residual(report, correlation(cert.alice[u][a], cert.bob[w][a]), tol,
                          {"edge-consistency", u, w, a, a, 0.0, {}});
    return report;
}

GeneralCert rank1_to_general(const Rank1Cert& cert) {
    const int c = cert.c;
    GeneralCert out;
    out.dA = out.dB = c;
    out.state.assign(static_cast<std::size_t>(c) * c, {0.0, 0.0});
    const double amp = 1.0 / std::sqrt(static_cast<double>(c));
    for (int i = 0; i < c; ++i) out.state[static_cast<std::size_t>(i) * c + i] = amp;
    out.alice.reserve(cert.unitaries.size());
    out.bob.reserve(cert.unitaries.size());
    for (const Matrix& u : cert.unitaries) {
        std::vector<Matrix> ev, fv;
        for (int a = 0; a < c; ++a) {
            Matrix e(c, c);
            const auto* col = u.col(a);
            for (int j = 0; j < c; ++j)
                for (int i = 0; i < c; ++i) e(i, j) = col[i] * std::conj(col[j]);
            fv.push_back(e.conjugate());
            ev.push_back(std::move(e));
        }
        out.alice.push_back(std::move(ev));
        out.bob.push_back(std::move(fv));
    }
    return out;
}

}  // namespace qchrom
