#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace harmonia {

/// Dense row-major matrix, just enough for the small symmetric eigenproblems
/// that show up in quadrature and kernel construction.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const double> data() const noexcept { return data_; }

  /// max |a_ij - a_ji| over the matrix; requires a square matrix.
  double asymmetry() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Eigen-decomposition of a real symmetric matrix. Values are sorted in
/// increasing order; column i of `vectors` is a unit eigenvector for
/// values[i].
struct SymmetricEigen {
  std::vector<double> values;
  Matrix vectors;
};

/// Implicit QL with Wilkinson shifts for a symmetric tridiagonal matrix.
/// `off_diagonal[i]` couples rows i and i + 1 (size diagonal.size() - 1).
/// Throws ConvergenceError after 60 sweeps on a single eigenvalue.
SymmetricEigen tridiagonal_eigen(std::span<const double> diagonal,
                                 std::span<const double> off_diagonal);

/// Cyclic Jacobi rotations for a dense symmetric matrix. Throws
/// std::invalid_argument for non-square or visibly non-symmetric input and
/// ConvergenceError if the off-diagonal mass does not vanish in 100 sweeps.
SymmetricEigen jacobi_eigen(const Matrix& a);

}  // namespace harmonia
