#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cuspcheck/rational.hpp"

namespace cuspcheck {

/// Small dense row-major matrix. Sizes here never exceed a handful of rows,
/// so everything is exact and allocation-per-call is fine.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) data_.insert(data_.end(), r.begin(), r.end());
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_columns(std::span<const std::vector<T>> columns, std::size_t rows) {
    Matrix m(rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    return m;
  }

  static Matrix from_rows(std::span<const std::vector<T>> rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

RationalMatrix to_rational(const IntegerMatrix& m);

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
RationalVector operator*(const RationalMatrix& a, std::span<const Rational> x);
IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

/// Determinant by fraction-free (Bareiss) elimination.
Integer determinant(const IntegerMatrix& m);
Rational determinant(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Solves m x = rhs for square nonsingular m. Rows are scaled to integers
/// and reduced with Bareiss elimination before exact back substitution.
/// Returns nullopt when m is singular.
std::optional<RationalVector> solve(const RationalMatrix& m, std::span<const Rational> rhs);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);
std::optional<IntegerMatrix> integer_inverse(const IntegerMatrix& m);

/// Basis of {x : m x = 0}, one vector per free column of the reduced echelon form.
std::vector<RationalVector> null_space(const RationalMatrix& m);

/// True iff v lies in the column space of m (m may have zero columns).
bool in_column_space(const RationalMatrix& m, std::span<const Rational> v);

/// Component of v orthogonal to the column space of m.
RationalVector orthogonal_residual(const RationalMatrix& m, std::span<const Rational> v);

/// Leading-principal-minor test; exact for symmetric rational matrices.
bool is_positive_definite(const RationalMatrix& m);

}  // namespace cuspcheck
