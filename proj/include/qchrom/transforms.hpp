#pragma once

#include <vector>

#include "qchrom/certificates.hpp"
#include "qchrom/graph.hpp"
#include "qchrom/vecrep.hpp"

namespace qchrom {

// [F_c]_{jk} = exp(2*pi*i*j*k/c) / sqrt(c)
Matrix fourier_matrix(int c);

// Colour k becomes the phase vector x_j = exp(2*pi*i*k*j/c); U_v = diag(x) F_c.
// Output passes verify_rank1 with residuals at rounding level.
Rank1Cert classical_to_rank1(const Graph& g, const ClassicalColouring& col);

// Fourier lift of an orthogonal representation whose vectors have constant
// entry modulus: vertex vector x (scaled to unit modulus) gives U_v = diag(x) F_c,
// c = rep dimension.
Rank1Cert unit_modulus_rep_to_rank1(const Graph& g, const VectorRep& rep);

// Real orthogonal representation in dimension <= 8, padded with zeros to 4 or
// 8 entries, lifted through an orthogonal design OD(4;1,..,1) or OD(8;1,..,1):
// U_v is the design matrix of the normalized vector. The 4x4 sign pattern is
// fixed; the 8x8 one comes from the octonion left-multiplication table and is
// re-verified as a design (V V^T = sum v_i^2 * I) before use.
Rank1Cert real_rep_to_rank1_od(const Graph& g, const VectorRep& rep);

// max |V V^T - (sum v_i^2) I| for the design matrix of v (n = 4 or 8);
// exposed so tests can pin the design property down independently
double od_design_residual(const std::vector<double>& v);

// first columns of the unitaries form an orthogonal representation, dim = c
VectorRep rank1_to_rep(const Graph& g, const Rank1Cert& cert);

// Compose a certificate for the homomorphism target into one for the source:
// vertex x of the source borrows the operators of map[x]. Preserves colour
// count and rank.
Rank1Cert pullback(const Homomorphism& hom, const Rank1Cert& cert);
ProjectorCert pullback(const Homomorphism& hom, const ProjectorCert& cert);
GeneralCert pullback(const Homomorphism& hom, const GeneralCert& cert);

// column alpha becomes the rank-1 projector onto it; r = 1, d = c
ProjectorCert rank1_to_projector(const Rank1Cert& cert);

// Tensor certificates for two graphs on the same vertex set into one for
// their edge union: colour (a, b) -> a*c_h + b gets E_{v,a} (x) E'_{v,b}.
ProjectorCert tensor_union(const Graph& g, const Graph& h, const ProjectorCert& cg,
                           const ProjectorCert& ch);

// Complete projective measurements of possibly mixed ranks, one list of c
// operators per vertex, all in one dimension d. The input to equalize_ranks.
struct MixedMeasurements {
    int c = 0;
    int d = 0;
    std::vector<std::vector<Matrix>> ops;  // [vertex][colour]
};

// E'_{v,a} = sum_i E_{v,(a+i) mod c} (x) |i><i| : every output projector has
// rank d and the certificate lives in dimension d*c. Preserves edge
// orthogonality and the colour semantics.
ProjectorCert equalize_ranks(const Graph& g, const MixedMeasurements& input);

struct NormalFormResult {
    bool ok = false;               // input passed verification; cert is valid
    VerifyReport input_report;     // verdict on the general certificate
    ProjectorCert cert;
    int schmidt_rank = 0;
    // || [rho, E] ||_max over all output projectors; vanishes in exact arithmetic
    double max_commutation_residual = 0.0;
    // || F - conj(E) ||_max: Bob's operators must be conjugate supports
    double max_conj_residual = 0.0;
    bool equalized = false;        // mixed support ranks forced a rank-equalization pass
};

// Reduce a passing general certificate to projector normal form: restrict to
// the Schmidt support of the state, extract each support projector
// E = supp(sqrt(rho) conj(F) sqrt(rho)) by eigendecomposition, and re-anchor
// on the maximally entangled state. Rank-ambiguous eigenvalues and
// conjugation mismatches throw; a failing input comes back with ok = false
// and its verification report.
NormalFormResult normal_form(const Graph& g, const GeneralCert& cert);

// Entry-modulus thresholds for phased-permutation detection: an entry is "the"
// nonzero of its row/column at modulus >= 0.99, noise below 1e-6; anything in
// between signals a malformed certificate.
inline constexpr double kPermHigh = 0.99;
inline constexpr double kPermLow = 1e-6;

// For a connected graph and a passing 3-colour rank-1 certificate, the gauge
// U_{v0}^dagger U_v is a phased permutation; reading off where column 0 lands
// recovers a proper 3-colouring.
ClassicalColouring extract_classical_3col(const Graph& g, const Rank1Cert& cert);

// (1 + 2*sqrt(2))^{2k}: chromatic upper bound as a function of orthogonal
// representation dimension k, for display in bound summaries
double upper_bound_report(int k);

}  // namespace qchrom
