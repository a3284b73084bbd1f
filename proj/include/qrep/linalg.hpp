#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qrep/matrix.hpp"

namespace qrep {

template <Field K>
struct Echelon {
  Matrix<K> reduced;                // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. The pivot in each column is the first row (from
/// the current position down) holding a nonzero entry, so output bases are
/// deterministic.
template <Field K>
Echelon<K> rref(Matrix<K> m) {
  const K& k = m.field();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t piv = row;
    while (piv < m.rows() && k.is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    auto inv = k.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = k.mul(inv, m(row, j));
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || k.is_zero(m(i, col))) continue;
      auto f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) = k.sub(m(i, j), k.mul(f, m(row, j)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

template <Field K>
std::size_t rank(const Matrix<K>& m) {
  if (m.empty()) return 0;
  return rref(m).pivots.size();
}

/// Columns spanning ker m, one per free column of the echelon form.
template <Field K>
Matrix<K> kernel_basis(const Matrix<K>& m) {
  const K& k = m.field();
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  Matrix<K> basis(k, m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis(free_cols[f], f) = k.one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      basis(e.pivots[r], f) = k.neg(e.reduced(r, free_cols[f]));
  }
  return basis;
}

template <Field K>
struct Solution {
  Matrix<K> particular;  // A * particular = B
  Matrix<K> kernel;      // columns span ker A
};

/// Solve A X = B. Free variables of the particular solution are zero.
template <Field K>
std::optional<Solution<K>> solve(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw ShapeError("solve: A is " + a.shape() + ", B is " + b.shape());
  const K& k = a.field();
  auto aug = hstack(k, a.rows(), {a, b});
  auto e = rref(aug);
  Matrix<K> x(k, a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[r], j) = e.reduced(r, a.cols() + j);
  }
  return Solution<K>{std::move(x), kernel_basis(a)};
}

/// The columns of m at its pivot positions: a basis of the column space.
template <Field K>
Matrix<K> column_basis(const Matrix<K>& m) {
  if (m.empty()) return Matrix<K>(m.field(), m.rows(), 0);
  return m.select_cols(rref(m).pivots);
}

/// Standard basis vectors completing the independent columns of s to a basis
/// of the ambient space (first-fit in index order).
template <Field K>
Matrix<K> complement_basis(const Matrix<K>& s) {
  const K& k = s.field();
  std::size_t d = s.rows();
  auto aug = hstack(k, d, {s, Matrix<K>::identity(k, d)});
  auto e = rref(aug);
  std::vector<std::size_t> picked;
  for (auto p : e.pivots)
    if (p >= s.cols()) picked.push_back(p - s.cols());
  return Matrix<K>::identity(k, d).select_cols(picked);
}

template <Field K>
Matrix<K> inverse(const Matrix<K>& m) {
  if (m.rows() != m.cols()) throw ShapeError("inverse of non-square " + m.shape());
  auto s = solve(m, Matrix<K>::identity(m.field(), m.rows()));
  if (!s || s->kernel.cols() != 0) throw MathError("matrix is singular");
  return s->particular;
}

template <Field K>
struct Quotient {
  Matrix<K> proj;  // d -> c, kills the subspace
  Matrix<K> lift;  // c -> d, proj * lift = id (complement vectors)
};

/// Quotient of k^d by the column span of s (columns of s independent).
template <Field K>
Quotient<K> quotient_by(const Matrix<K>& s) {
  const K& k = s.field();
  auto sb = column_basis(s);
  auto c = complement_basis(sb);
  auto full = hstack(k, s.rows(), {sb, c});
  auto inv = inverse(full);
  return {inv.block(sb.cols(), c.cols(), 0, s.rows()), c};
}

}  // namespace qrep
