#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wongseq/field.hpp"

namespace wongseq {

// Dense row-major matrix over one exact field. Matrices act on the left of
// column vectors: a rows x cols matrix maps F^cols to F^rows.
template <ExactField F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(const F& field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(const F& field, const std::vector<std::vector<value_type>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::DimMismatch, "ragged row list");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_ints(const F& field, const std::vector<std::vector<long long>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::DimMismatch, "ragged row list");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  // Unit matrix E_ij, zero-based indices.
  static Matrix unit(const F& field, std::size_t rows, std::size_t cols, std::size_t i,
                     std::size_t j) {
    Matrix m(field, rows, cols);
    m(i, j) = field.one();
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<value_type> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const value_type> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const value_type> entries() const { return data_; }

  std::vector<value_type> column(std::size_t j) const {
    std::vector<value_type> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!field_.is_zero(x)) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix scaled(const value_type& c) const {
    Matrix out = *this;
    for (auto& x : out.data_) x = field_.mul(c, x);
    return out;
  }

  // this += c * other
  void add_scaled(const value_type& c, const Matrix& other) {
    check_same_shape(other);
    if (field_.is_zero(c)) return;
    for (std::size_t i = 0; i < data_.size(); ++i)
      data_[i] = field_.mul_add(data_[i], c, other.data_[i]);
  }

  std::vector<value_type> apply(std::span<const value_type> v) const {
    if (v.size() != cols_) throw Error(ErrorCode::DimMismatch, "vector length vs matrix columns");
    std::vector<value_type> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
      value_type acc = field_.zero();
      for (std::size_t j = 0; j < cols_; ++j)
        if (!field_.is_zero(v[j])) acc = field_.mul_add(acc, (*this)(i, j), v[j]);
      out[i] = std::move(acc);
    }
    return out;
  }

  // Zero-padded copy with the top-left block equal to this matrix.
  Matrix padded(std::size_t rows, std::size_t cols) const {
    Matrix out(field_, rows, cols);
    for (std::size_t i = 0; i < rows_ && i < rows; ++i)
      for (std::size_t j = 0; j < cols_ && j < cols; ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) const {
    Matrix out(field_, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.add_scaled(a.field_.one(), b);
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.add_scaled(a.field_.neg(a.field_.one()), b);
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    a.check_field(b);
    if (a.cols_ != b.rows_) throw Error(ErrorCode::DimMismatch, "inner dimensions of product");
    const F& f = a.field_;
    Matrix c(f, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const value_type& x = a(i, k);
        if (f.is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = f.mul_add(c(i, j), x, b(k, j));
      }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_) || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? "; " : "";
      for (std::size_t j = 0; j < cols_; ++j) s += (j ? " " : "") + field_.to_string((*this)(i, j));
    }
    return s + "]";
  }

 private:
  void check_field(const Matrix& other) const {
    if (!(field_ == other.field_))
      throw Error(ErrorCode::FieldMismatch,
                  field_.spec().name() + " vs " + other.field_.spec().name());
  }
  void check_same_shape(const Matrix& other) const {
    check_field(other);
    if (rows_ != other.rows_ || cols_ != other.cols_)
      throw Error(ErrorCode::DimMismatch, "matrix shapes differ");
  }

  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

// Entrywise image of a matrix under a field embedding.
inline Matrix<FiniteField> embed(const Matrix<FiniteField>& m, const FieldEmbedding& e) {
  if (!(m.field() == e.source()))
    throw Error(ErrorCode::FieldMismatch, "matrix field differs from embedding source");
  Matrix<FiniteField> out(e.target(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = e(m(i, j));
  return out;
}

}  // namespace wongseq
