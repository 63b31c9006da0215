#include "qchrom/linalg.hpp"

#include <Eigen/Dense>
#include <sstream>

#include "qchrom/errors.hpp"

namespace qchrom {

namespace {

using EMat = Eigen::MatrixXcd;  // column-major complex<double>, same layout as Matrix

Eigen::Map<const EMat> as_eigen(const Matrix& a) {
    return {a.data(), a.rows(), a.cols()};
}

Matrix from_eigen(const EMat& m) {
    Matrix out(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    Eigen::Map<EMat>(out.data(), m.rows(), m.cols()) = m;
    return out;
}

}  // namespace

EigenSystem hermitian_eigensystem(const Matrix& a) {
    if (!a.is_square()) throw InvalidInput("eigendecomposition of a non-square matrix");
    Eigen::SelfAdjointEigenSolver<EMat> solver(as_eigen(a));
    if (solver.info() != Eigen::Success)
        throw VerificationError("hermitian eigendecomposition did not converge");
    EigenSystem sys;
    sys.values.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + a.rows());
    sys.vectors = from_eigen(solver.eigenvectors());
    return sys;
}

std::vector<double> hermitian_eigenvalues(const Matrix& a) {
    if (!a.is_square()) throw InvalidInput("eigendecomposition of a non-square matrix");
    Eigen::SelfAdjointEigenSolver<EMat> solver(as_eigen(a), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw VerificationError("hermitian eigendecomposition did not converge");
    return {solver.eigenvalues().data(), solver.eigenvalues().data() + a.rows()};
}

Svd svd(const Matrix& a) {
    Eigen::JacobiSVD<EMat> solver(as_eigen(a), Eigen::ComputeThinU | Eigen::ComputeThinV);
    Svd out;
    out.u = from_eigen(solver.matrixU());
    out.v = from_eigen(solver.matrixV());
    const auto& s = solver.singularValues();
    out.singular_values.assign(s.data(), s.data() + s.size());
    return out;
}

SupportResult support_projector(const Matrix& a, double rank_rel_tol, double ambiguity) {
    EigenSystem sys = hermitian_eigensystem(a);
    const int n = a.rows();
    SupportResult res;
    res.projector = Matrix::zero(n, n);
    const double lambda_max = sys.values.empty() ? 0.0 : sys.values.back();
    if (lambda_max <= 0.0) return res;  // zero (or negative) matrix: empty support
    res.threshold = rank_rel_tol * lambda_max;
    for (double lam : sys.values) {
        if (lam > res.threshold / ambiguity && lam < res.threshold * ambiguity) {
            std::ostringstream msg;
            msg << "numerically ambiguous rank: eigenvalue " << lam
                << " within a factor of " << ambiguity << " of the support threshold "
                << res.threshold;
            throw VerificationError(msg.str());
        }
    }
    for (int i = 0; i < n; ++i) {
        if (sys.values[i] <= res.threshold) continue;
        ++res.rank;
        const auto* v = sys.vectors.col(i);
        for (int col = 0; col < n; ++col)
            for (int row = 0; row < n; ++row)
                res.projector(row, col) += v[row] * std::conj(v[col]);
    }
    return res;
}

}  // namespace qchrom
