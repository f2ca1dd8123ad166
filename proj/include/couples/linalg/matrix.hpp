#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "couples/linalg/rational.hpp"

namespace couples {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  /// Row-wise literal; every row must have the same length.
  static Matrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows, std::size_t cols);
  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<Rational> column(std::size_t c) const;
  const std::vector<Rational>& entries() const { return data_; }

  bool is_zero() const;
  bool is_identity() const;

  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix select_columns(std::span<const std::size_t> indices) const;
  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const;
  Matrix column_block(std::size_t first, std::size_t count) const;

  Matrix operator-() const;
  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& scalar);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix a);

/// [a | b]
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]
Matrix vstack(const Matrix& a, const Matrix& b);
/// diag(a, b)
Matrix block_diagonal(const Matrix& a, const Matrix& b);
/// Kronecker product, used to vectorize two-sided matrix equations.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Column-major vectorization (vec(X) stacks the columns of X).
std::vector<Rational> vectorize(const Matrix& m);
Matrix unvectorize(std::span<const Rational> v, std::size_t rows, std::size_t cols);

std::string to_string(const Matrix& m);

}  // namespace couples
