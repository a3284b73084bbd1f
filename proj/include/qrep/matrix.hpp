#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qrep/errors.hpp"
#include "qrep/field.hpp"

namespace qrep {

/// Dense row-major matrix over a field K. The field instance travels with
/// the matrix, so GF(p) matrices know their p.
template <Field K>
class Matrix {
 public:
  using value_type = typename K::value_type;

  Matrix() = default;
  Matrix(K k, std::size_t rows, std::size_t cols)
      : k_(std::move(k)), rows_(rows), cols_(cols), data_(rows * cols, k_.zero()) {}
  Matrix(K k, std::size_t rows, std::size_t cols, std::vector<value_type> data)
      : k_(std::move(k)), rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ShapeError("matrix entry count does not match shape");
  }

  static Matrix identity(const K& k, std::size_t n) {
    Matrix m(k, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
    return m;
  }
  static Matrix zero(const K& k, std::size_t r, std::size_t c) { return Matrix(k, r, c); }

  /// Build from integer rows; entries are reduced into K.
  static Matrix from_ints(const K& k, const std::vector<std::vector<long long>>& rows, std::size_t cols = 0) {
    std::size_t r = rows.size();
    std::size_t c = r ? rows[0].size() : cols;
    Matrix m(k, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c) throw ShapeError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = k.from_int(rows[i][j]);
    }
    return m;
  }

  const K& field() const { return k_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<value_type>& data() const { return data_; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!k_.is_zero(x)) return false;
    return true;
  }
  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if ((*this)(i, j) != (i == j ? k_.one() : k_.zero())) return false;
    return true;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  Matrix operator+(const Matrix& o) const {
    check_same(o, "+");
    Matrix r(k_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = k_.add(data_[i], o.data_[i]);
    return r;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o, "-");
    Matrix r(k_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = k_.sub(data_[i], o.data_[i]);
    return r;
  }
  Matrix operator-() const {
    Matrix r(k_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = k_.neg(data_[i]);
    return r;
  }
  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_)
      throw ShapeError("matrix product " + shape() + " * " + o.shape());
    Matrix r(k_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t l = 0; l < cols_; ++l) {
        const value_type& a = (*this)(i, l);
        if (k_.is_zero(a)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j)
          r(i, j) = k_.add(r(i, j), k_.mul(a, o(l, j)));
      }
    return r;
  }
  Matrix scaled(const value_type& c) const {
    Matrix r(k_, rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = k_.mul(c, data_[i]);
    return r;
  }
  Matrix transpose() const {
    Matrix r(k_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  Matrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeError("block out of range");
    Matrix r(k_, nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeError("set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
  Matrix select_cols(const std::vector<std::size_t>& idx) const {
    Matrix r(k_, rows_, idx.size());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
    return r;
  }
  Matrix column(std::size_t j) const { return block(0, rows_, j, 1); }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

 private:
  void check_same(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw ShapeError(std::string("matrix ") + op + " " + shape() + " vs " + o.shape());
  }

  K k_{};
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<value_type> data_;
};

template <Field K>
Matrix<K> hstack(const K& k, std::size_t rows, const std::vector<Matrix<K>>& parts) {
  std::size_t c = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw ShapeError("hstack row mismatch");
    c += p.cols();
  }
  Matrix<K> r(k, rows, c);
  std::size_t off = 0;
  for (const auto& p : parts) {
    r.set_block(0, off, p);
    off += p.cols();
  }
  return r;
}

template <Field K>
Matrix<K> vstack(const K& k, std::size_t cols, const std::vector<Matrix<K>>& parts) {
  std::size_t r = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw ShapeError("vstack column mismatch");
    r += p.rows();
  }
  Matrix<K> m(k, r, cols);
  std::size_t off = 0;
  for (const auto& p : parts) {
    m.set_block(off, 0, p);
    off += p.rows();
  }
  return m;
}

template <Field K>
Matrix<K> block_diag(const K& k, const std::vector<Matrix<K>>& parts) {
  std::size_t r = 0, c = 0;
  for (const auto& p : parts) {
    r += p.rows();
    c += p.cols();
  }
  Matrix<K> m(k, r, c);
  std::size_t ro = 0, co = 0;
  for (const auto& p : parts) {
    m.set_block(ro, co, p);
    ro += p.rows();
    co += p.cols();
  }
  return m;
}

template <Field K>
Matrix<K> power(const Matrix<K>& m, int e) {
  Matrix<K> r = Matrix<K>::identity(m.field(), m.rows());
  for (int i = 0; i < e; ++i) r = r * m;
  return r;
}

}  // namespace qrep
