#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace fastattrib {

using VecD = std::vector<double>;

/// Dense row-major f64 matrix.
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(size_t rows, size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(size_t rows, size_t cols, VecD data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t size() const { return data_.size(); }

    double& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
    double operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    double* row(size_t i) { return data_.data() + i * cols_; }
    const double* row(size_t i) const { return data_.data() + i * cols_; }

    VecD& data() { return data_; }
    const VecD& data() const { return data_; }

    bool all_finite() const;

    static Matrix identity(size_t n);

  private:
    size_t rows_, cols_;
    VecD data_;
};

// Basic kernels. All loops have a fixed iteration order so results are
// bit-stable across runs and thread counts.

/// y = M x
VecD matvec(const Matrix& m, const VecD& x);

/// y = M^T x
VecD matvec_t(const Matrix& m, const VecD& x);

/// C = A * B
Matrix matmul(const Matrix& a, const Matrix& b);

/// C = A * B^T  (dot products of rows; the cache-friendly core primitive)
Matrix matmul_bt(const Matrix& a, const Matrix& b);

/// C = A^T * B
Matrix matmul_at(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

double dot(const VecD& a, const VecD& b);
double norm2(const VecD& a);
void axpy(double alpha, const VecD& x, VecD& y);  // y += alpha x

/// Eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
/// Returns (U, s) with m = U diag(s) U^T, eigenvalues sorted descending and
/// eigenvector signs fixed deterministically.
/// Throws PreconditionError for non-square/asymmetric input, NumericError
/// (with sweep count) if off-diagonal mass fails to vanish.
std::pair<Matrix, VecD> sym_eigh(const Matrix& m);

}  // namespace fastattrib
