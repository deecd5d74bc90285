#include "strathom/algebra/matrix.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace strathom {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("hstack: row mismatch");
  Matrix m(a.rows_, a.cols_ + b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
  }
  return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("vstack: column mismatch");
  Matrix m(a.rows_ + b.rows_, a.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) m(a.rows_ + i, j) = b(i, j);
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw std::invalid_argument("from_columns: length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

std::vector<Integer> Matrix::column(std::size_t j) const {
  std::vector<Integer> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Matrix Matrix::select_columns(const std::vector<std::size_t>& cols) const {
  Matrix m(rows_, cols.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) m(i, j) = (*this)(i, cols[j]);
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix m(rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(rows[i], j);
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

std::size_t Matrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_)
    if (x != 0) ++n;
  return n;
}

Matrix Matrix::reduced(const Coefficients& ring) const {
  Matrix m = *this;
  if (ring.is_prime_field())
    for (auto& x : m.data_) ring.normalize(x);
  return m;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix m(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Integer& b = other(k, j);
        if (b != 0) m(i, j) += a * b;
      }
    }
  return m;
}

std::vector<Integer> Matrix::operator*(const std::vector<Integer>& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<Integer> out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (v[k] != 0 && (*this)(i, k) != 0) out[i] += (*this)(i, k) * v[k];
  return out;
}

Matrix Matrix::operator+(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += other.data_[i];
  return m;
}

Matrix Matrix::operator-(const Matrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= other.data_[i];
  return m;
}

Matrix Matrix::operator-() const {
  Matrix m = *this;
  for (auto& x : m.data_) x = -x;
  return m;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void Matrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void Matrix::add_row_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  Integer* t = &data_[target * cols_];
  const Integer* s = &data_[source * cols_];
  for (std::size_t j = 0; j < cols_; ++j)
    if (s[j] != 0) mpz_addmul(t[j].get_mpz_t(), s[j].get_mpz_t(), factor.get_mpz_t());
}

void Matrix::add_col_multiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) {
    const Integer& s = (*this)(i, source);
    if (s != 0) mpz_addmul((*this)(i, target).get_mpz_t(), s.get_mpz_t(), factor.get_mpz_t());
  }
}

void Matrix::scale_row(std::size_t r, const Integer& factor) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) *= factor;
}

void Matrix::scale_col(std::size_t c, const Integer& factor) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) *= factor;
}

void Matrix::reduce_row(std::size_t r, const Coefficients& ring) {
  if (!ring.is_prime_field()) return;
  for (std::size_t j = 0; j < cols_; ++j) ring.normalize((*this)(r, j));
}

void Matrix::reduce_col(std::size_t c, const Coefficients& ring) {
  if (!ring.is_prime_field()) return;
  for (std::size_t i = 0; i < rows_; ++i) ring.normalize((*this)(i, c));
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

IntMatrix::IntMatrix(const Matrix& dense) : rows_(dense.rows()), cols_(dense.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (dense(i, j) != 0) entries_.emplace(std::make_pair(i, j), dense(i, j));
}

Integer IntMatrix::get(std::size_t i, std::size_t j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? Integer(0) : it->second;
}

void IntMatrix::set(std::size_t i, std::size_t j, const Integer& value) {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("IntMatrix::set index out of bounds");
  if (value == 0)
    entries_.erase({i, j});
  else
    entries_[{i, j}] = value;
}

Matrix IntMatrix::dense() const {
  Matrix m(rows_, cols_);
  for (const auto& [ij, v] : entries_) m(ij.first, ij.second) = v;
  return m;
}

void IntMatrix::write_triplets(std::ostream& os) const {
  os << rows_ << ' ' << cols_ << '\n';
  for (const auto& [ij, v] : entries_) os << ij.first << ' ' << ij.second << ' ' << v << '\n';
}

IntMatrix IntMatrix::read_triplets(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++line_no;
      auto pos = line.find_first_not_of(" \t\r");
      if (pos == std::string::npos || line[pos] == '#') continue;
      return true;
    }
    return false;
  };
  if (!next_line()) throw ValidationError("triplet file: missing header line");
  std::istringstream header(line);
  std::size_t rows = 0, cols = 0;
  if (!(header >> rows >> cols))
    throw ValidationError("triplet file line " + std::to_string(line_no) + ": expected 'rows cols'");
  IntMatrix m(rows, cols);
  while (next_line()) {
    std::istringstream in(line);
    std::size_t i = 0, j = 0;
    std::string value;
    if (!(in >> i >> j >> value))
      throw ValidationError("triplet file line " + std::to_string(line_no) + ": expected 'row col value'");
    if (i >= rows || j >= cols)
      throw ValidationError("triplet file line " + std::to_string(line_no) + ": index out of bounds");
    Integer v;
    if (v.set_str(value, 10) != 0)
      throw ValidationError("triplet file line " + std::to_string(line_no) + ": bad integer '" + value + "'");
    m.set(i, j, m.get(i, j) + v);
  }
  return m;
}

}  // namespace strathom
