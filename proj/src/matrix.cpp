#include "qchrom/matrix.hpp"

#include <string>

#include "qchrom/errors.hpp"
#include "qchrom/kernels.hpp"

namespace qchrom {

namespace {

void check_dims(int rows, int cols) {
    if (rows <= 0 || cols <= 0)
        throw InvalidInput("matrix dimensions must be positive");
    if (rows > kDimCap || cols > kDimCap)
        throw InvalidInput("matrix dimension " + std::to_string(std::max(rows, cols)) +
                           " exceeds the cap of " + std::to_string(kDimCap));
}

void check_same_shape(const Matrix& a, const Matrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw InvalidInput(std::string("shape mismatch in matrix ") + op);
}

}  // namespace

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    check_dims(rows, cols);
    data_.assign(static_cast<std::size_t>(rows) * cols, {0.0, 0.0});
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::zero(int rows, int cols) { return Matrix(rows, cols); }

Matrix Matrix::diag(const std::vector<std::complex<double>>& entries) {
    Matrix m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = entries[i];
    return m;
}

Matrix Matrix::dagger() const {
    Matrix m(cols_, rows_);
    for (int j = 0; j < cols_; ++j)
        for (int i = 0; i < rows_; ++i) m(j, i) = std::conj((*this)(i, j));
    return m;
}

Matrix Matrix::conjugate() const {
    Matrix m(rows_, cols_);
    for (int j = 0; j < cols_; ++j)
        for (int i = 0; i < rows_; ++i) m(i, j) = std::conj((*this)(i, j));
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(cols_, rows_);
    for (int j = 0; j < cols_; ++j)
        for (int i = 0; i < rows_; ++i) m(j, i) = (*this)(i, j);
    return m;
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) m = std::max(m, std::abs(z));
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "addition");
    Matrix m(a.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) m(i, j) = a(i, j) + b(i, j);
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same_shape(a, b, "subtraction");
    Matrix m(a.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) m(i, j) = a(i, j) - b(i, j);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("shape mismatch in matrix product");
    Matrix m(a.rows(), b.cols());
    for (int j = 0; j < b.cols(); ++j) {
        auto* out = m.col(j);
        for (int k = 0; k < a.cols(); ++k) {
            const std::complex<double> s = b(k, j);
            if (s == std::complex<double>{0.0, 0.0}) continue;
            const auto* ak = a.col(k);
            for (int i = 0; i < a.rows(); ++i) out[i] += ak[i] * s;
        }
    }
    return m;
}

Matrix operator*(std::complex<double> s, const Matrix& a) {
    Matrix m(a.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j)
        for (int i = 0; i < a.rows(); ++i) m(i, j) = s * a(i, j);
    return m;
}

Matrix dagger_mul(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw InvalidInput("shape mismatch in dagger_mul");
    Matrix m(a.cols(), b.cols());
    const auto n = static_cast<std::size_t>(a.rows());
    for (int j = 0; j < b.cols(); ++j)
        for (int i = 0; i < a.cols(); ++i) m(i, j) = kern::cdot(a.col(i), b.col(j), n);
    return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int ja = 0; ja < a.cols(); ++ja)
        for (int ia = 0; ia < a.rows(); ++ia) {
            const std::complex<double> s = a(ia, ja);
            if (s == std::complex<double>{0.0, 0.0}) continue;
            for (int jb = 0; jb < b.cols(); ++jb)
                for (int ib = 0; ib < b.rows(); ++ib)
                    m(ia * b.rows() + ib, ja * b.cols() + jb) = s * b(ib, jb);
        }
    return m;
}

std::complex<double> trace(const Matrix& a) {
    if (!a.is_square()) throw InvalidInput("trace of a non-square matrix");
    std::complex<double> t = 0.0;
    for (int i = 0; i < a.rows(); ++i) t += a(i, i);
    return t;
}

double unitarity_residual(const Matrix& a) {
    if (!a.is_square()) throw InvalidInput("unitarity check on a non-square matrix");
    return (dagger_mul(a, a) - Matrix::identity(a.cols())).max_abs();
}

double hermiticity_residual(const Matrix& a) {
    if (!a.is_square()) throw InvalidInput("hermiticity check on a non-square matrix");
    return (a - a.dagger()).max_abs();
}

}  // namespace qchrom
