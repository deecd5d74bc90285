#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <utility>
#include <vector>

#include "strathom/algebra/coefficients.hpp"

namespace strathom {

/// Dense integer matrix, row-major. Working type of every elimination routine.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t n);
  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<Integer> column(std::size_t j) const;
  Matrix select_columns(const std::vector<std::size_t>& cols) const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  Matrix transpose() const;
  bool is_zero() const;
  std::size_t nonzeros() const;

  /// Entries reduced to canonical residues (no-op over Z and Q).
  Matrix reduced(const Coefficients& ring) const;

  Matrix operator*(const Matrix& other) const;
  std::vector<Integer> operator*(const std::vector<Integer>& v) const;
  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  // Elementary operations used by the normal-form routines.
  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  /// col[target] += factor * col[source]
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void scale_row(std::size_t r, const Integer& factor);
  void scale_col(std::size_t c, const Integer& factor);
  void reduce_row(std::size_t r, const Coefficients& ring);
  void reduce_col(std::size_t c, const Coefficients& ring);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Sparse integer matrix; no stored zeros. Serializes to the triplet format
///   rows cols
///   row col value
///   ...
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}
  explicit IntMatrix(const Matrix& dense);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const { return entries_.size(); }

  Integer get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Integer& value);
  const std::map<std::pair<std::size_t, std::size_t>, Integer>& entries() const { return entries_; }

  Matrix dense() const;

  void write_triplets(std::ostream& os) const;
  static IntMatrix read_triplets(std::istream& is);

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::map<std::pair<std::size_t, std::size_t>, Integer> entries_;
};

}  // namespace strathom
