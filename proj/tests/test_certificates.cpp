#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "qchrom/certificates.hpp"
#include "qchrom/errors.hpp"
#include "qchrom/graph.hpp"
#include "qchrom/transforms.hpp"

using namespace qchrom;
using cplx = std::complex<double>;

namespace {

Matrix outer(const std::vector<cplx>& v) {
    Matrix m(static_cast<int>(v.size()), static_cast<int>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) m(static_cast<int>(i), static_cast<int>(j)) = v[i] * std::conj(v[j]);
    return m;
}

Matrix basis_projector(int d, int k) {
    Matrix m(d, d);
    m(k, k) = 1.0;
    return m;
}

}  // namespace

TEST_CASE("K_2 fourier certificate verifies; identity matrices fail on the edge") {
    Graph k2(2, {{0, 1}});
    Rank1Cert good = classical_to_rank1(k2, ClassicalColouring{2, {0, 1}});
    VerifyReport r = verify_rank1(k2, good);
    CHECK(r.pass);
    CHECK(r.worst_residual <= 1e-12);

    Rank1Cert bad{2, {Matrix::identity(2), Matrix::identity(2)}};
    VerifyReport rb = verify_rank1(k2, bad);
    CHECK(!rb.pass);
    REQUIRE(!rb.violations.empty());
    bool found = false;
    for (const Violation& v : rb.violations)
        if (v.kind == "edge-diagonal" && v.u == 0 && v.v == 1 && std::abs(v.residual - 1.0) <= 1e-12)
            found = true;
    CHECK(found);
}

TEST_CASE("non-unitary matrices are flagged, not silently accepted") {
    Graph k2(2, {{0, 1}});
    Matrix half = 0.5 * Matrix::identity(2);
    Rank1Cert cert{2, {half, fourier_matrix(2)}};
    VerifyReport r = verify_rank1(k2, cert);
    CHECK(!r.pass);
    bool found = false;
    for (const Violation& v : r.violations)
        if (v.kind == "unitarity" && v.u == 0) found = true;
    CHECK(found);
}

TEST_CASE("rank1 structural errors throw") {
    Graph k2(2, {{0, 1}});
    CHECK_THROWS_AS(verify_rank1(k2, Rank1Cert{2, {Matrix::identity(2)}}), InvalidInput);
    CHECK_THROWS_AS(verify_rank1(k2, Rank1Cert{0, {}}), InvalidInput);
    CHECK_THROWS_AS(
        verify_rank1(k2, Rank1Cert{3, {Matrix::identity(2), Matrix::identity(2)}}),
        InvalidInput);
}

TEST_CASE("cyclic-shift projector certificate on K_3") {
    Graph k3 = complete_graph(3);
    ProjectorCert cert;
    cert.c = 3;
    cert.r = 1;
    cert.d = 3;
    cert.projectors.resize(3);
    for (int v = 0; v < 3; ++v)
        for (int a = 0; a < 3; ++a) cert.projectors[v].push_back(basis_projector(3, (a + v) % 3));
    VerifyReport r = verify_projector(k3, cert);
    CHECK(r.pass);
    CHECK(r.worst_residual <= 1e-15);

    SUBCASE("declared rank mismatch becomes a rank violation") {
        cert.r = 3;
        cert.d = 9;
        // structural: d no longer matches the matrices
        CHECK_THROWS_AS(verify_projector(k3, cert), InvalidInput);
    }
    SUBCASE("wrong rank declaration with consistent dimension") {
        // d = r*c forces r=1 for 3x3 matrices with c=3, so craft c=1, d=3, r=3
        Graph g1(1);
        ProjectorCert one;
        one.c = 1;
        one.r = 3;
        one.d = 3;
        one.projectors = {{basis_projector(3, 0)}};
        VerifyReport rr = verify_projector(g1, one);
        CHECK(!rr.pass);
        bool rank_viol = false, complete_viol = false;
        for (const Violation& v : rr.violations) {
            if (v.kind == "rank") rank_viol = true;
            if (v.kind == "completeness") complete_viol = true;
        }
        CHECK(rank_viol);
        CHECK(complete_viol);  // a rank-1 projector cannot resolve the identity alone
    }
    SUBCASE("idempotency violation") {
        cert.projectors[0][0] = 0.5 * Matrix::identity(3);
        VerifyReport rr = verify_projector(k3, cert);
        CHECK(!rr.pass);
        bool found = false;
        for (const Violation& v : rr.violations)
            if (v.kind == "idempotency" && v.u == 0 && v.colour_a == 0) found = true;
        CHECK(found);
    }
    SUBCASE("edge orthogonality violation names edge and colour") {
        ProjectorCert same = cert;
        same.projectors[1] = same.projectors[0];  // vertices 0,1 now share colours
        VerifyReport rr = verify_projector(k3, same);
        CHECK(!rr.pass);
        bool found = false;
        for (const Violation& v : rr.violations)
            if (v.kind == "edge-orthogonality" && v.u == 0 && v.v == 1 && v.colour_a >= 0)
                found = true;
        CHECK(found);
    }
}

TEST_CASE("general certificate built from a rank-1 one verifies") {
    Graph c5 = cycle_graph(5);
    Rank1Cert r1 = classical_to_rank1(c5, ClassicalColouring{3, {0, 1, 0, 1, 2}});
    GeneralCert gen = rank1_to_general(r1);
    CHECK(gen.dA == 3);
    CHECK(gen.dB == 3);
    CHECK(general_colour_count(gen) == 3);
    VerifyReport r = verify_general(c5, gen);
    CHECK(r.pass);
    CHECK(r.worst_residual <= 1e-12);

    // the projector lift agrees
    CHECK(verify_projector(c5, rank1_to_projector(r1)).pass);
}

TEST_CASE("anti-aligned POVMs violate same-vertex consistency") {
    Graph g1(1);
    GeneralCert cert;
    cert.dA = 2;
    cert.dB = 2;
    const double s = 1.0 / std::sqrt(2.0);
    cert.state = {s, 0, 0, s};  // maximally entangled pair
    cert.alice = {{basis_projector(2, 0), basis_projector(2, 1)}};
    cert.bob = {{basis_projector(2, 1), basis_projector(2, 0)}};  // swapped
    VerifyReport r = verify_general(g1, cert);
    CHECK(!r.pass);
    bool found = false;
    for (const Violation& v : r.violations)
        if (v.kind == "consistency" && v.u == 0 && std::abs(v.residual - 0.5) <= 1e-12)
            found = true;
    CHECK(found);
}

TEST_CASE("edge consistency catches shared colours across an edge") {
    Graph k2(2, {{0, 1}});
    GeneralCert cert;
    cert.dA = 2;
    cert.dB = 2;
    const double s = 1.0 / std::sqrt(2.0);
    cert.state = {s, 0, 0, s};
    auto povm = std::vector<Matrix>{basis_projector(2, 0), basis_projector(2, 1)};
    cert.alice = {povm, povm};  // both vertices answer identically
    cert.bob = {povm, povm};
    VerifyReport r = verify_general(k2, cert);
    CHECK(!r.pass);
    bool found = false;
    for (const Violation& v : r.violations)
        if (v.kind == "edge-consistency" && v.u == 0 && v.v == 1) found = true;
    CHECK(found);
}

TEST_CASE("general structural and state checks") {
    Graph g1(1);
    GeneralCert cert;
    cert.dA = 2;
    cert.dB = 2;
    cert.state = {1, 0, 0};  // wrong length
    cert.alice = {{Matrix::identity(2)}};
    cert.bob = {{Matrix::identity(2)}};
    CHECK_THROWS_AS(verify_general(g1, cert), InvalidInput);

    cert.state = {1, 0, 0, 1};  // norm sqrt(2): flagged, not thrown
    VerifyReport r = verify_general(g1, cert);
    CHECK(!r.pass);
    bool found = false;
    for (const Violation& v : r.violations)
        if (v.kind == "state-norm") found = true;
    CHECK(found);
}

TEST_CASE("positivity violation on a POVM element") {
    Graph g1(1);
    GeneralCert cert;
    cert.dA = 2;
    cert.dB = 2;
    const double s = 1.0 / std::sqrt(2.0);
    cert.state = {s, 0, 0, s};
    Matrix plus2 = 2.0 * basis_projector(2, 0) - basis_projector(2, 1);  // eigenvalue -1
    Matrix rest = Matrix::identity(2) - plus2;
    cert.alice = {{plus2, rest}};
    cert.bob = {{basis_projector(2, 0), basis_projector(2, 1)}};
    VerifyReport r = verify_general(g1, cert);
    CHECK(!r.pass);
    bool found = false;
    for (const Violation& v : r.violations)
        if (v.kind == "positivity" && std::abs(v.residual - 1.0) <= 1e-9) found = true;
    CHECK(found);
}

TEST_CASE("outer product helper sanity: projectors are idempotent") {
    Matrix p = outer({cplx(1, 0) / std::sqrt(2.0), cplx(0, 1) / std::sqrt(2.0)});
    CHECK((p * p - p).max_abs() <= 1e-15);
    CHECK(hermiticity_residual(p) <= 1e-15);
}
