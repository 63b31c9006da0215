#pragma once

#include <vector>

#include "qchrom/matrix.hpp"

namespace qchrom {

// Relative eigenvalue threshold for support extraction: an eigenvalue counts
// as nonzero when it exceeds rank_rel_tol * lambda_max. Anything within a
// factor of kRankAmbiguity of that threshold makes the rank numerically
// ambiguous and is reported as an error rather than silently rounded.
inline constexpr double kRankRelTol = 1e-8;
inline constexpr double kRankAmbiguity = 10.0;

struct EigenSystem {
    std::vector<double> values;  // ascending
    Matrix vectors;              // column i is a unit eigenvector for values[i]
};

// a must be Hermitian; only its lower triangle is read
EigenSystem hermitian_eigensystem(const Matrix& a);
std::vector<double> hermitian_eigenvalues(const Matrix& a);

// a = u * diag(singular_values) * v^dagger with singular values descending;
// u and v are thin (min(rows, cols) columns)
struct Svd {
    Matrix u;
    std::vector<double> singular_values;
    Matrix v;
};
Svd svd(const Matrix& a);

struct SupportResult {
    Matrix projector;
    int rank = 0;
    double threshold = 0.0;
};

// Orthogonal projector onto the span of eigenvectors of the Hermitian
// positive semidefinite matrix a whose eigenvalue exceeds
// rank_rel_tol * lambda_max. Throws VerificationError when an eigenvalue lies
// within a factor of `ambiguity` of the threshold.
SupportResult support_projector(const Matrix& a, double rank_rel_tol = kRankRelTol,
                                double ambiguity = kRankAmbiguity);

}  // namespace qchrom
