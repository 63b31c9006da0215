#pragma once

#include <complex>
#include <vector>

namespace qchrom {

// Largest matrix dimension any operation will produce. Keeps runaway tensor
// products (kron, rank equalization) from exhausting memory by accident.
inline constexpr int kDimCap = 256;

// Dense column-major complex matrix. Columns are contiguous so the conjugated
// dot kernel applies directly to column pairs.
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols);  // zero-filled

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols);
    static Matrix diag(const std::vector<std::complex<double>>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    std::complex<double>& operator()(int i, int j) { return data_[static_cast<std::size_t>(j) * rows_ + i]; }
    const std::complex<double>& operator()(int i, int j) const { return data_[static_cast<std::size_t>(j) * rows_ + i]; }

    std::complex<double>* col(int j) { return data_.data() + static_cast<std::size_t>(j) * rows_; }
    const std::complex<double>* col(int j) const { return data_.data() + static_cast<std::size_t>(j) * rows_; }

    std::complex<double>* data() { return data_.data(); }
    const std::complex<double>* data() const { return data_.data(); }

    Matrix dagger() const;
    Matrix conjugate() const;
    Matrix transpose() const;
    double max_abs() const;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::complex<double>> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(std::complex<double> s, const Matrix& a);

// a^dagger * b without forming the adjoint; uses the conjugated dot kernel
Matrix dagger_mul(const Matrix& a, const Matrix& b);

Matrix kron(const Matrix& a, const Matrix& b);
std::complex<double> trace(const Matrix& a);

// max |(a^dagger a - I)_{ij}|
double unitarity_residual(const Matrix& a);
// max |(a - a^dagger)_{ij}|
double hermiticity_residual(const Matrix& a);

}  // namespace qchrom
