#pragma once

// Small dense linear algebra for the symmetric positive-definite systems
// that show up in logistic fitting (p is at most a handful of columns).

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace retailfail {

using Vector = std::vector<double>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const double> data() const noexcept { return data_; }

  Matrix transpose() const;
  Vector diag() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const double> x);

// Lower-triangular L with L * L^T == a. Throws SingularMatrixError when a
// pivot falls to 1e-12 * max(diag(a)) or below, DomainError when a is not
// square or not symmetric.
Matrix cholesky(const Matrix& a);

Vector solve_spd(const Matrix& a, std::span<const double> b);
Matrix inverse_spd(const Matrix& a);
double log_det_spd(const Matrix& a);

// Solves with an existing Cholesky factor.
Vector cholesky_solve(const Matrix& lower, std::span<const double> b);

// Principal submatrix on the given index set.
Matrix submatrix(const Matrix& a, std::span<const std::size_t> idx);

}  // namespace retailfail
