/** @file matrix.hpp
 *  @brief Dense exact matrices, Hermite normal form and friends.
 */
#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quatlat/arith.hpp"

namespace quatlat {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols = 0) {
    Matrix m(rows.size(), rows.empty() ? cols : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const std::vector<T>& r) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = r[j];
  }
  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator<(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
    if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
    return a.data_ < b.data_;
  }

  const std::vector<T>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntegerMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using IntegerVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

RationalMatrix to_rational(const IntegerMatrix& m);
RationalVector to_rational(const IntegerVector& v);
/// Throws std::domain_error if some entry is not integral.
IntegerMatrix to_integer(const RationalMatrix& m);

Rational determinant(const RationalMatrix& m);
Integer determinant(const IntegerMatrix& m);
std::size_t rank(const RationalMatrix& m);
/// Inverse of a square nonsingular matrix; throws std::domain_error otherwise.
RationalMatrix inverse(const RationalMatrix& m);

/// Solves x·B = v for a row vector x, B of full row rank; nullopt if v ∉ rowspace(B).
std::optional<RationalVector> solve_left(const RationalMatrix& b, const RationalVector& v);

/// x·M for a row vector x.
RationalVector row_times(const RationalVector& x, const RationalMatrix& m);
IntegerVector row_times(const IntegerVector& x, const IntegerMatrix& m);
Rational dot(const RationalVector& a, const RationalVector& b);

/// Row-style Hermite normal form: H = U·M with U unimodular, H's nonzero rows in
/// echelon form with positive pivots and reduced entries above pivots.
struct HnfResult {
  IntegerMatrix h;          ///< nonzero rows only
  IntegerMatrix transform;  ///< full unimodular U (rows(M) × rows(M))
  std::size_t rank = 0;
};
HnfResult hnf(const IntegerMatrix& m);

/// Basis of the integer left kernel {x ∈ Zᵏ : x·M = 0}, in HNF.
IntegerMatrix left_kernel(const IntegerMatrix& m);

/// Least common multiple of all denominators.
Integer common_denominator(const RationalMatrix& m);

}  // namespace quatlat
