#include <cmath>
#include <complex>
#include <vector>

#include "doctest.h"
#include "qchrom/certificates.hpp"
#include "qchrom/datasets.hpp"
#include "qchrom/errors.hpp"
#include "qchrom/graph.hpp"
#include "qchrom/rng.hpp"
#include "qchrom/transforms.hpp"
#include "qchrom/vecrep.hpp"

using namespace qchrom;
using cplx = std::complex<double>;

TEST_CASE("fourier matrix is unitary with the expected entries") {
    for (int c : {1, 2, 3, 4, 8}) {
        Matrix f = fourier_matrix(c);
        CHECK(unitarity_residual(f) <= 1e-12);
    }
    Matrix f2 = fourier_matrix(2);
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(f2(0, 0) - cplx(s, 0)) <= 1e-15);
    CHECK(std::abs(f2(1, 1) - cplx(-s, 0)) <= 1e-12);
}

TEST_CASE("classical lift verifies and rejects improper colourings") {
    Graph c5 = cycle_graph(5);
    Rank1Cert cert = classical_to_rank1(c5, ClassicalColouring{3, {0, 1, 0, 1, 2}});
    CHECK(cert.c == 3);
    CHECK(verify_rank1(c5, cert).pass);
    CHECK_THROWS_AS(classical_to_rank1(c5, ClassicalColouring{3, {0, 0, 1, 2, 1}}),
                    InvalidInput);
}

TEST_CASE("unit-modulus lift of the p=3 roots representation") {
    auto [g, rep] = roots_of_unity_graph(3);
    Rank1Cert cert = unit_modulus_rep_to_rank1(g, rep);
    CHECK(cert.c == 3);
    VerifyReport r = verify_rank1(g, cert);
    CHECK(r.pass);
    CHECK(r.worst_residual <= 1e-12);
}

TEST_CASE("unit-modulus lift refuses a non-orthogonal representation") {
    // (1,1) and (1,i) are not orthogonal but we claim an edge
    VectorRep rep = VectorRep::gaussian({{{1, 0}, {1, 0}}, {{1, 0}, {0, 1}}});
    Graph k2(2, {{0, 1}});
    CHECK_THROWS_AS(unit_modulus_rep_to_rank1(k2, rep), InvalidInput);
    // mixed entry moduli are rejected too
    VectorRep mixed = VectorRep::integer_real({{2, 1}, {1, -2}});
    CHECK_THROWS_AS(unit_modulus_rep_to_rank1(Graph(2, {{0, 1}}), mixed), InvalidInput);
}

TEST_CASE("orthogonal designs: residual vanishes for random vectors") {
    SplitMix64 rng(31);
    for (int dim : {4, 8}) {
        for (int t = 0; t < 20; ++t) {
            std::vector<double> v(dim);
            for (auto& x : v) x = rng.next_double() * 4 - 2;
            CHECK(od_design_residual(v) <= 1e-12);
        }
    }
}

TEST_CASE("od lift of the 18-vertex dataset: 4 colours, residual <= 1e-12") {
    auto [g, rep] = g18_dataset();
    Rank1Cert cert = real_rep_to_rank1_od(g, rep);
    CHECK(cert.c == 4);
    VerifyReport r = verify_rank1(g, cert, 1e-12);
    CHECK(r.pass);
    CHECK(r.worst_residual <= 1e-12);
}

TEST_CASE("od lift pads dimensions 5..8 into the octonion design") {
    // orthogonal pair in R^5 lifts through OD(8)
    VectorRep rep = VectorRep::integer_real({{1, 1, 0, 0, 1}, {1, -1, 0, 0, 0}});
    Graph k2(2, {{0, 1}});
    Rank1Cert cert = real_rep_to_rank1_od(k2, rep);
    CHECK(cert.c == 8);
    CHECK(verify_rank1(k2, cert).pass);

    VectorRep wide = VectorRep::integer_real({{1, 0, 0, 0, 0, 0, 0, 0, 1}});
    CHECK_THROWS_AS(real_rep_to_rank1_od(Graph(1), wide), InvalidInput);
}

TEST_CASE("rank1_to_rep returns an orthogonal representation") {
    Graph c5 = cycle_graph(5);
    Rank1Cert cert = classical_to_rank1(c5, ClassicalColouring{3, {0, 1, 0, 1, 2}});
    VectorRep rep = rank1_to_rep(c5, cert);
    CHECK(rep.count() == 5);
    CHECK(rep.dim() == 3);
    for (auto [u, v] : c5.edges()) CHECK(rep.orthogonal(u, v));
}

TEST_CASE("pullback along a homomorphism preserves the pass verdict") {
    Graph p3(3, {{0, 1}, {1, 2}});
    Graph k2(2, {{0, 1}});
    Rank1Cert cert = classical_to_rank1(k2, ClassicalColouring{2, {0, 1}});
    Homomorphism hom{p3, k2, {0, 1, 0}};
    Rank1Cert pulled = pullback(hom, cert);
    CHECK(pulled.c == 2);
    CHECK(verify_rank1(p3, pulled).pass);

    // projector and general variants ride the same map
    CHECK(verify_projector(p3, pullback(hom, rank1_to_projector(cert))).pass);
    CHECK(verify_general(p3, pullback(hom, rank1_to_general(cert))).pass);

    Homomorphism broken{p3, k2, {0, 0, 1}};  // edge (0,1) collapses
    CHECK_THROWS_AS(pullback(broken, cert), InvalidInput);
}

TEST_CASE("tensor union multiplies colour counts on the edge union") {
    Graph a(3, {{0, 1}});
    Graph b(3, {{1, 2}});
    Rank1Cert ca = classical_to_rank1(a, ClassicalColouring{2, {0, 1, 0}});
    Rank1Cert cb = classical_to_rank1(b, ClassicalColouring{2, {0, 0, 1}});
    ProjectorCert t = tensor_union(a, b, rank1_to_projector(ca), rank1_to_projector(cb));
    CHECK(t.c == 4);
    CHECK(t.r == 1);
    CHECK(t.d == 4);
    Graph u = union_same_vertices(a, b);
    CHECK(verify_projector(u, t).pass);
}

TEST_CASE("equalize_ranks balances a mixed-rank measurement family") {
    Graph k2(2, {{0, 1}});
    auto diag3 = [](double a, double b, double c) {
        return Matrix::diag({cplx(a, 0), cplx(b, 0), cplx(c, 0)});
    };
    MixedMeasurements mm;
    mm.c = 2;
    mm.d = 3;
    mm.ops = {{diag3(1, 0, 0), diag3(0, 1, 1)}, {diag3(0, 1, 1), diag3(1, 0, 0)}};
    ProjectorCert cert = equalize_ranks(k2, mm);
    CHECK(cert.c == 2);
    CHECK(cert.r == 3);
    CHECK(cert.d == 6);
    VerifyReport r = verify_projector(k2, cert);
    CHECK(r.pass);

    SUBCASE("non-projector operator is rejected") {
        mm.ops[0][0] = 0.5 * diag3(1, 0, 0);
        mm.ops[0][1] = Matrix::identity(3) - mm.ops[0][0];
        CHECK_THROWS_AS(equalize_ranks(k2, mm), InvalidInput);
    }
    SUBCASE("incomplete measurement is rejected") {
        mm.ops[0][1] = diag3(0, 1, 0);
        CHECK_THROWS_AS(equalize_ranks(k2, mm), InvalidInput);
    }
    SUBCASE("edge orthogonality failure is rejected") {
        mm.ops[1] = mm.ops[0];
        CHECK_THROWS_AS(equalize_ranks(k2, mm), InvalidInput);
    }
}

TEST_CASE("normal form recovers the projector shape of an embedded rank-1 cert") {
    Graph k2(2, {{0, 1}});
    Rank1Cert r1 = classical_to_rank1(k2, ClassicalColouring{2, {0, 1}});
    NormalFormResult nf = normal_form(k2, rank1_to_general(r1));
    REQUIRE(nf.ok);
    CHECK(!nf.equalized);
    CHECK(nf.schmidt_rank == 2);
    CHECK(nf.cert.r == 1);
    CHECK(nf.cert.d == 2);
    CHECK(nf.max_commutation_residual <= 1e-9);
    CHECK(nf.max_conj_residual <= 1e-9);
    CHECK(verify_projector(k2, nf.cert).pass);

    // matches the direct projector lift entrywise
    ProjectorCert direct = rank1_to_projector(r1);
    for (int v = 0; v < 2; ++v)
        for (int a = 0; a < 2; ++a)
            CHECK((nf.cert.projectors[v][a] - direct.projectors[v][a]).max_abs() <= 1e-9);
}

TEST_CASE("normal form equalizes mixed support ranks") {
    Graph k2(2, {{0, 1}});
    const double s = 1.0 / std::sqrt(3.0);
    GeneralCert cert;
    cert.dA = 3;
    cert.dB = 3;
    cert.state = {s, 0, 0, 0, s, 0, 0, 0, s};
    auto diag3 = [](double a, double b, double c) {
        return Matrix::diag({cplx(a, 0), cplx(b, 0), cplx(c, 0)});
    };
    cert.alice = {{diag3(1, 0, 0), diag3(0, 1, 1)}, {diag3(0, 1, 1), diag3(1, 0, 0)}};
    cert.bob = cert.alice;  // real diagonal operators equal their conjugates
    NormalFormResult nf = normal_form(k2, cert);
    REQUIRE(nf.ok);
    CHECK(nf.schmidt_rank == 3);
    CHECK(nf.equalized);
    CHECK(nf.cert.c == 2);
    CHECK(nf.cert.r == 3);
    CHECK(nf.cert.d == 6);
    CHECK(verify_projector(k2, nf.cert).pass);
}

TEST_CASE("normal form hands back the report of a failing input") {
    Graph k2(2, {{0, 1}});
    GeneralCert cert;
    cert.dA = 2;
    cert.dB = 2;
    const double s = 1.0 / std::sqrt(2.0);
    cert.state = {s, 0, 0, s};
    auto p0 = Matrix::diag({cplx(1, 0), cplx(0, 0)});
    auto p1 = Matrix::diag({cplx(0, 0), cplx(1, 0)});
    cert.alice = {{p0, p1}, {p0, p1}};  // identical on an edge: fails
    cert.bob = cert.alice;
    NormalFormResult nf = normal_form(k2, cert);
    CHECK(!nf.ok);
    CHECK(!nf.input_report.pass);
}

TEST_CASE("3-colouring extraction round-trips classical lifts") {
    Graph c5 = cycle_graph(5);
    SUBCASE("identity palette") {
        ClassicalColouring col{3, {0, 1, 0, 1, 2}};
        ClassicalColouring back = extract_classical_3col(c5, classical_to_rank1(c5, col));
        CHECK(back.colour == col.colour);
        CHECK(verify_proper_colouring(c5, back).pass);
    }
    SUBCASE("rotated palette comes back shifted to colour 0 at vertex 0") {
        ClassicalColouring col{3, {1, 2, 1, 2, 0}};
        ClassicalColouring back = extract_classical_3col(c5, classical_to_rank1(c5, col));
        CHECK(verify_proper_colouring(c5, back).pass);
        for (int v = 0; v < 5; ++v) CHECK(back.colour[v] == (col.colour[v] + 3 - 1) % 3);
    }
    SUBCASE("rejects wrong colour count") {
        Rank1Cert cert = classical_to_rank1(c5, ClassicalColouring{4, {0, 1, 0, 1, 2}});
        CHECK_THROWS_AS(extract_classical_3col(c5, cert), InvalidInput);
    }
    SUBCASE("rejects disconnected graphs") {
        Graph g(4, {{0, 1}, {2, 3}});
        Rank1Cert cert = classical_to_rank1(g, ClassicalColouring{3, {0, 1, 0, 1}});
        CHECK_THROWS_AS(extract_classical_3col(g, cert), InvalidInput);
    }
    SUBCASE("rejects a failing certificate") {
        Rank1Cert cert{3, {Matrix::identity(3), Matrix::identity(3), Matrix::identity(3),
                           Matrix::identity(3), Matrix::identity(3)}};
        CHECK_THROWS_AS(extract_classical_3col(c5, cert), VerificationError);
    }
}

TEST_CASE("upper bound report") {
    CHECK(std::abs(upper_bound_report(1) - (9 + 4 * std::sqrt(2.0))) <= 1e-9);
    CHECK(std::abs(upper_bound_report(2) - 214.82337649086284) <= 1e-6);
    CHECK_THROWS_AS(upper_bound_report(0), InvalidInput);
    CHECK_THROWS_AS(upper_bound_report(101), InvalidInput);
}
