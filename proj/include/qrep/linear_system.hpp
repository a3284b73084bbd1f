#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qrep/linalg.hpp"

namespace qrep {

/// Linear equations in unknown matrices X_0, X_1, ...
/// Each equation reads  sum_t sign_t * L_t X_{j_t} R_t = C,  where a missing
/// L or R means the identity and a missing C means zero.
template <Field K>
class LinearSystem {
 public:
  struct Term {
    std::size_t unknown;
    std::optional<Matrix<K>> left;
    std::optional<Matrix<K>> right;
    bool negate = false;
  };

  explicit LinearSystem(K k) : k_(std::move(k)) {}

  std::size_t add_unknown(std::size_t rows, std::size_t cols) {
    shapes_.push_back({rows, cols});
    offsets_.push_back(total_);
    total_ += rows * cols;
    return shapes_.size() - 1;
  }

  std::size_t unknown_count() const { return shapes_.size(); }
  std::size_t variable_count() const { return total_; }

  /// Add an equation with output shape out_rows x out_cols.
  void add_equation(std::size_t out_rows, std::size_t out_cols, const std::vector<Term>& terms,
                    const std::optional<Matrix<K>>& rhs = std::nullopt) {
    if (out_rows == 0 || out_cols == 0) return;
    if (rhs && (rhs->rows() != out_rows || rhs->cols() != out_cols))
      throw ShapeError("equation right-hand side has shape " + rhs->shape());
    std::size_t base = rows_.size();
    for (std::size_t i = 0; i < out_rows * out_cols; ++i) {
      rows_.emplace_back();
      rhs_.push_back(k_.zero());
    }
    for (const auto& t : terms) {
      auto [xr, xc] = shapes_.at(t.unknown);
      std::size_t lr = t.left ? t.left->rows() : xr, lc = t.left ? t.left->cols() : xr;
      std::size_t rr = t.right ? t.right->rows() : xc, rc = t.right ? t.right->cols() : xc;
      if (lr != out_rows || lc != xr || rr != xc || rc != out_cols)
        throw ShapeError("equation term does not match unknown/output shape");
      std::size_t off = offsets_[t.unknown];
      for (std::size_t i = 0; i < out_rows; ++i)
        for (std::size_t p = 0; p < xr; ++p) {
          auto l = t.left ? (*t.left)(i, p) : (i == p ? k_.one() : k_.zero());
          if (k_.is_zero(l)) continue;
          for (std::size_t q = 0; q < xc; ++q)
            for (std::size_t j = 0; j < out_cols; ++j) {
              auto r = t.right ? (*t.right)(q, j) : (q == j ? k_.one() : k_.zero());
              if (k_.is_zero(r)) continue;
              auto c = k_.mul(l, r);
              if (t.negate) c = k_.neg(c);
              accumulate(base + i * out_cols + j, off + p * xc + q, c);
            }
        }
    }
    if (rhs)
      for (std::size_t i = 0; i < out_rows; ++i)
        for (std::size_t j = 0; j < out_cols; ++j) rhs_[base + i * out_cols + j] = (*rhs)(i, j);
  }

  /// Constrain unknown j to equal a fixed matrix.
  void fix(std::size_t j, const Matrix<K>& value) {
    add_equation(value.rows(), value.cols(), {{j, std::nullopt, std::nullopt, false}}, value);
  }

  Matrix<K> coefficient_matrix() const {
    Matrix<K> m(k_, rows_.size(), total_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (const auto& [c, v] : rows_[i]) m(i, c) = v;
    return m;
  }
  Matrix<K> rhs_column() const {
    Matrix<K> m(k_, rhs_.size(), 1);
    for (std::size_t i = 0; i < rhs_.size(); ++i) m(i, 0) = rhs_[i];
    return m;
  }

  /// Split a flat variable vector (column j of v) into the unknown matrices.
  std::vector<Matrix<K>> unpack(const Matrix<K>& v, std::size_t col = 0) const {
    std::vector<Matrix<K>> out;
    for (std::size_t u = 0; u < shapes_.size(); ++u) {
      auto [r, c] = shapes_[u];
      Matrix<K> x(k_, r, c);
      for (std::size_t p = 0; p < r; ++p)
        for (std::size_t q = 0; q < c; ++q) x(p, q) = v(offsets_[u] + p * c + q, col);
      out.push_back(std::move(x));
    }
    return out;
  }

  struct Result {
    std::vector<Matrix<K>> particular;
    std::vector<std::vector<Matrix<K>>> kernel;
  };

  std::optional<Result> solve() const {
    auto a = coefficient_matrix();
    auto b = rhs_column();
    if (rows_.empty()) {
      a = Matrix<K>(k_, 0, total_);
      b = Matrix<K>(k_, 0, 1);
    }
    auto s = qrep::solve(a, b);
    if (!s) return std::nullopt;
    Result r{unpack(s->particular), {}};
    for (std::size_t j = 0; j < s->kernel.cols(); ++j) r.kernel.push_back(unpack(s->kernel, j));
    return r;
  }

  /// Dimension of the solution space of the homogeneous system.
  std::size_t nullity() const {
    if (rows_.empty()) return total_;
    return total_ - rank(coefficient_matrix());
  }

  bool solvable() const { return solve().has_value(); }

 private:
  void accumulate(std::size_t row, std::size_t col, const typename K::value_type& c) {
    auto& r = rows_[row];
    for (auto& [cc, v] : r)
      if (cc == col) {
        v = k_.add(v, c);
        return;
      }
    r.emplace_back(col, c);
  }

  K k_;
  std::vector<std::pair<std::size_t, std::size_t>> shapes_;
  std::vector<std::size_t> offsets_;
  std::size_t total_ = 0;
  std::vector<std::vector<std::pair<std::size_t, typename K::value_type>>> rows_;
  std::vector<typename K::value_type> rhs_;
};

}  // namespace qrep
