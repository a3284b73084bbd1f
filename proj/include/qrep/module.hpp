#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "qrep/linear_system.hpp"

namespace qrep {

/// The algebra A = k[x]/(x^n).
template <Field K>
struct BaseAlgebra {
  K field;
  int n = 1;

  BaseAlgebra(K k, int nil) : field(std::move(k)), n(nil) {
    if (n < 1) throw InputError("nilpotency index must be at least 1");
  }
  bool operator==(const BaseAlgebra&) const = default;
};

/// A finite-dimensional A-module: a vector space with the action of x given
/// by a nilpotent operator.
template <Field K>
struct AModule {
  Matrix<K> op;

  AModule() = default;
  explicit AModule(Matrix<K> n) : op(std::move(n)) {
    if (op.rows() != op.cols()) throw ShapeError("module operator must be square, got " + op.shape());
  }
  std::size_t dim() const { return op.rows(); }
  const K& field() const { return op.field(); }
  bool operator==(const AModule&) const = default;
};

template <Field K>
AModule<K> make_module(const BaseAlgebra<K>& alg, Matrix<K> op) {
  AModule<K> m(std::move(op));
  if (!power(m.op, alg.n).is_zero())
    throw InputError("module operator is not killed by x^" + std::to_string(alg.n));
  return m;
}

template <Field K>
AModule<K> zero_module(const K& k) {
  return AModule<K>(Matrix<K>(k, 0, 0));
}

/// k = A/(x), the simple module.
template <Field K>
AModule<K> simple_module(const K& k) {
  return AModule<K>(Matrix<K>(k, 1, 1));
}

/// A^r with basis x^j g_l at position l*n + j.
template <Field K>
AModule<K> free_module(const BaseAlgebra<K>& alg, std::size_t r) {
  std::size_t n = alg.n;
  Matrix<K> op(alg.field, r * n, r * n);
  for (std::size_t l = 0; l < r; ++l)
    for (std::size_t j = 0; j + 1 < n; ++j) op(l * n + j + 1, l * n + j) = alg.field.one();
  return AModule<K>(std::move(op));
}

template <Field K>
bool is_module_hom(const AModule<K>& src, const AModule<K>& dst, const Matrix<K>& f) {
  if (f.rows() != dst.dim() || f.cols() != src.dim()) return false;
  return f * src.op == dst.op * f;
}

/// Add the A-linearity constraint F N_src = N_dst F for an unknown.
template <Field K>
void add_linearity(LinearSystem<K>& sys, std::size_t unknown, const AModule<K>& src, const AModule<K>& dst) {
  sys.add_equation(dst.dim(), src.dim(),
                   {{unknown, std::nullopt, src.op, false}, {unknown, dst.op, std::nullopt, true}});
}

/// Basis of Hom_A(M1, M2) as matrices.
template <Field K>
std::vector<Matrix<K>> hom_basis(const AModule<K>& m1, const AModule<K>& m2) {
  LinearSystem<K> sys(m1.field());
  auto u = sys.add_unknown(m2.dim(), m1.dim());
  add_linearity(sys, u, m1, m2);
  auto r = sys.solve();
  std::vector<Matrix<K>> out;
  for (auto& v : r->kernel) out.push_back(v[0]);
  return out;
}

template <Field K>
std::size_t hom_dim(const AModule<K>& m1, const AModule<K>& m2) {
  LinearSystem<K> sys(m1.field());
  auto u = sys.add_unknown(m2.dim(), m1.dim());
  add_linearity(sys, u, m1, m2);
  return sys.nullity();
}

/// Submodule spanned by the independent, N-stable columns of incl.
template <Field K>
AModule<K> submodule(const AModule<K>& m, const Matrix<K>& incl) {
  auto s = solve(incl, m.op * incl);
  if (!s) throw MathError("subspace is not stable under x");
  return AModule<K>(s->particular);
}

template <Field K>
struct SubObject {
  AModule<K> module;
  Matrix<K> map;  // inclusion (kernel, image) or projection (cokernel)
};

template <Field K>
SubObject<K> kernel(const AModule<K>& src, const Matrix<K>& f) {
  auto b = kernel_basis(f);
  return {submodule(src, b), b};
}

template <Field K>
SubObject<K> image(const AModule<K>& dst, const Matrix<K>& f) {
  auto b = column_basis(f);
  return {submodule(dst, b), b};
}

/// Quotient of m by the N-stable column span of s.
template <Field K>
SubObject<K> quotient(const AModule<K>& m, const Matrix<K>& s) {
  auto q = quotient_by(s);
  return {AModule<K>(q.proj * m.op * q.lift), q.proj};
}

template <Field K>
SubObject<K> cokernel(const AModule<K>& dst, const Matrix<K>& f) {
  if (f.rows() != dst.dim()) throw ShapeError("cokernel: map does not land in target");
  return quotient(dst, f);
}

template <Field K>
bool is_projective(const BaseAlgebra<K>& alg, const AModule<K>& m) {
  std::size_t d = m.dim();
  std::size_t n = alg.n;
  if (d % n != 0) return false;
  Matrix<K> p = Matrix<K>::identity(m.field(), d);
  for (std::size_t i = 0; i <= n; ++i) {
    if (rank(p) != d * (n - i) / n) return false;
    p = p * m.op;
  }
  return true;
}

/// k[x]/(x^n) is self-injective, so injective and projective modules coincide.
template <Field K>
bool is_injective(const BaseAlgebra<K>& alg, const AModule<K>& m) {
  return is_projective(alg, m);
}

template <Field K>
struct Cover {
  AModule<K> proj;
  Matrix<K> rho;  // proj -> target, surjective
};

/// Minimal projective cover: generators are standard basis vectors
/// completing im(N); column l*n+j of rho is N^j g_l.
template <Field K>
Cover<K> projective_epi(const BaseAlgebra<K>& alg, const AModule<K>& m) {
  const K& k = m.field();
  auto gens = complement_basis(column_basis(m.op));
  std::size_t r = gens.cols(), n = alg.n;
  auto p = free_module(alg, r);
  Matrix<K> rho(k, m.dim(), r * n);
  for (std::size_t l = 0; l < r; ++l) {
    Matrix<K> v = gens.column(l);
    for (std::size_t j = 0; j < n; ++j) {
      rho.set_block(0, l * n + j, v);
      v = m.op * v;
    }
  }
  return {p, rho};
}

/// The A-linear map A -> m sending the generator to v (a column).
template <Field K>
Matrix<K> map_from_free(const BaseAlgebra<K>& alg, const AModule<K>& m, const Matrix<K>& v) {
  Matrix<K> out(m.field(), m.dim(), alg.n);
  Matrix<K> w = v;
  for (int j = 0; j < alg.n; ++j) {
    out.set_block(0, j, w);
    w = m.op * w;
  }
  return out;
}

template <Field K>
bool is_split_epi(const AModule<K>& src, const AModule<K>& dst, const Matrix<K>& f) {
  LinearSystem<K> sys(src.field());
  auto s = sys.add_unknown(src.dim(), dst.dim());
  add_linearity(sys, s, dst, src);
  sys.add_equation(dst.dim(), dst.dim(), {{s, f, std::nullopt, false}},
                   Matrix<K>::identity(src.field(), dst.dim()));
  return sys.solvable();
}

template <Field K>
bool is_split_mono(const AModule<K>& src, const AModule<K>& dst, const Matrix<K>& f) {
  LinearSystem<K> sys(src.field());
  auto r = sys.add_unknown(src.dim(), dst.dim());
  add_linearity(sys, r, dst, src);
  sys.add_equation(src.dim(), src.dim(), {{r, std::nullopt, f, false}},
                   Matrix<K>::identity(src.field(), src.dim()));
  return sys.solvable();
}

template <Field K>
struct SumData {
  AModule<K> sum;
  std::vector<Matrix<K>> inj;   // summand -> sum
  std::vector<Matrix<K>> proj;  // sum -> summand
};

template <Field K>
SumData<K> direct_sum(const K& k, const std::vector<AModule<K>>& parts) {
  std::vector<Matrix<K>> ops;
  std::size_t total = 0;
  for (const auto& p : parts) {
    ops.push_back(p.op);
    total += p.dim();
  }
  SumData<K> out{AModule<K>(block_diag(k, ops)), {}, {}};
  std::size_t off = 0;
  for (const auto& p : parts) {
    Matrix<K> i(k, total, p.dim());
    i.set_block(off, 0, Matrix<K>::identity(k, p.dim()));
    out.proj.push_back(i.transpose());
    out.inj.push_back(std::move(i));
    off += p.dim();
  }
  return out;
}

template <Field K>
AModule<K> dual(const AModule<K>& m) {
  return AModule<K>(m.op.transpose());
}

}  // namespace qrep
