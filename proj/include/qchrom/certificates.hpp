#pragma once

#include <complex>
#include <vector>

#include "qchrom/graph.hpp"
#include "qchrom/matrix.hpp"

namespace qchrom {

// Absolute tolerance for unitarity / orthogonality / consistency residuals.
// Certificates here come from exact constructions, so genuine residuals are
// rounding-level; the wide gap keeps pass/fail unambiguous.
inline constexpr double kCertTolerance = 1e-9;

// c-colour certificate in the rank-1 model: one c x c unitary per vertex,
// column alpha being the measurement vector |e_{v,alpha}>. On every edge vw
// the diagonal of U_v^dagger U_w must vanish (shared colours are forbidden).
struct Rank1Cert {
    int c = 0;
    std::vector<Matrix> unitaries;  // indexed by vertex
};

// c-colour certificate in the rank-r model: per vertex a complete projective
// measurement of c projectors, all of rank r, in dimension d = r*c; on edges
// same-colour projectors must be orthogonal (E_{v,a} E_{w,a} = 0).
struct ProjectorCert {
    int c = 0;
    int r = 0;
    int d = 0;
    std::vector<std::vector<Matrix>> projectors;  // [vertex][colour]
};

// Fully general certificate: a shared pure state and one c-outcome POVM pair
// per vertex. Consistency demands that same-vertex outcomes agree and
// edge-sharing colours never co-occur.
struct GeneralCert {
    int dA = 0, dB = 0;
    std::vector<std::complex<double>> state;      // length dA*dB, index j*dB + l
    std::vector<std::vector<Matrix>> alice;       // [vertex][colour], dA x dA
    std::vector<std::vector<Matrix>> bob;         // [vertex][colour], dB x dB
};

struct VerifyReport {
    bool pass = true;
    double worst_residual = 0.0;
    std::vector<Violation> violations;
};

VerifyReport verify_rank1(const Graph& g, const Rank1Cert& cert, double tol = kCertTolerance);
VerifyReport verify_projector(const Graph& g, const ProjectorCert& cert, double tol = kCertTolerance);
VerifyReport verify_general(const Graph& g, const GeneralCert& cert, double tol = kCertTolerance);

// Embed a rank-1 certificate as a general one: maximally entangled state of
// rank c, Alice measures the columns, Bob the conjugated columns.
GeneralCert rank1_to_general(const Rank1Cert& cert);

// number of colours of a general certificate (outcomes per POVM)
int general_colour_count(const GeneralCert& cert);

}  // namespace qchrom
