#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qrep/resolution.hpp"

namespace qrep {

// Arrow objects (A -f-> B) are representations of A2: vertex index 0 is the
// top A, vertex index 1 the bottom B, arrow index 0 the map f.

template <Field K>
void require_arrow_object(const Rep<K>& x) {
  const auto& q = *x.quiver;
  if (q.vertex_count() != 2 || q.arrow_count() != 1 || q.source(0) != 0 || q.target(0) != 1)
    throw InputError("expected a representation of the quiver 1 -> 2");
}

template <Field K>
bool is_mono_object(const Rep<K>& x) {
  require_arrow_object(x);
  return rank(x.maps[0]) == x.dim(0);
}

template <Field K>
bool is_epi_object(const Rep<K>& x) {
  require_arrow_object(x);
  return rank(x.maps[0]) == x.dim(1);
}

/// (A -f-> B) |-> (B -can-> Coker f).
template <Field K>
Rep<K> cok_object(const Rep<K>& x) {
  require_arrow_object(x);
  auto c = cokernel(x.mods[1], x.maps[0]);
  return {x.quiver, {x.mods[1], c.module}, {c.map}};
}

/// (A -g-> B) |-> (Ker g -incl-> A).
template <Field K>
Rep<K> ker_object(const Rep<K>& x) {
  require_arrow_object(x);
  auto kr = kernel(x.mods[0], x.maps[0]);
  return {x.quiver, {kr.module, x.mods[0]}, {kr.map}};
}

/// Cok on a morphism (alpha, beta) : X -> Y gives (beta, induced map on cokernels).
template <Field K>
RepMorphism<K> cok_morphism(const Rep<K>& x, const Rep<K>& y, const RepMorphism<K>& f) {
  auto qx = quotient_by(x.maps[0]);
  auto qy = quotient_by(y.maps[0]);
  return {f[1], qy.proj * f[1] * qx.lift};
}

/// Ker on a morphism (alpha, beta) : X -> Y gives (map on kernels, alpha).
template <Field K>
RepMorphism<K> ker_morphism(const Rep<K>& x, const Rep<K>& y, const RepMorphism<K>& f) {
  auto kx = kernel_basis(x.maps[0]);
  auto ky = kernel_basis(y.maps[0]);
  auto s = solve(ky, f[0] * kx);
  if (!s) throw ShapeError("not a morphism of arrow objects");
  return {s->particular, f[0]};
}

/// Cok applied termwise; every term must have a mono structure map.
template <Field K>
Complex<K> cok_complex(const Complex<K>& x) {
  Complex<K> c{x.field, x.quiver, x.lo, x.hi, {}, {}};
  for (int j = x.lo; j <= x.hi; ++j) {
    if (!is_mono_object(x.term(j))) throw InputError("cok_complex: term in degree " + std::to_string(j) + " is not mono");
    c.terms.push_back(cok_object(x.term(j)));
  }
  for (int j = x.lo; j < x.hi; ++j) c.diffs.push_back(cok_morphism(x.term(j), x.term(j + 1), x.diff(j)));
  return c;
}

/// Ker applied termwise; every term must have an epi structure map.
template <Field K>
Complex<K> ker_complex(const Complex<K>& x) {
  Complex<K> c{x.field, x.quiver, x.lo, x.hi, {}, {}};
  for (int j = x.lo; j <= x.hi; ++j) {
    if (!is_epi_object(x.term(j))) throw InputError("ker_complex: term in degree " + std::to_string(j) + " is not epi");
    c.terms.push_back(ker_object(x.term(j)));
  }
  for (int j = x.lo; j < x.hi; ++j) c.diffs.push_back(ker_morphism(x.term(j), x.term(j + 1), x.diff(j)));
  return c;
}

/// Invertible X -> Ker(Cok X) for a mono object X.
template <Field K>
RepMorphism<K> unit_ker_cok(const Rep<K>& x) {
  if (!is_mono_object(x)) throw InputError("expected a mono object");
  auto kc = ker_object(cok_object(x));
  auto top = solve(kc.maps[0], x.maps[0]);
  return {top->particular, Matrix<K>::identity(x.mods[0].field(), x.dim(1))};
}

/// Invertible Cok(Ker X) -> X for an epi object X.
template <Field K>
RepMorphism<K> counit_cok_ker(const Rep<K>& x) {
  if (!is_epi_object(x)) throw InputError("expected an epi object");
  auto q = quotient_by(kernel_basis(x.maps[0]));
  return {Matrix<K>::identity(x.mods[0].field(), x.dim(0)), x.maps[0] * q.lift};
}

template <Field K>
struct PsiResult {
  Complex<K> complex;
  std::optional<int> cut;
};

/// Cok applied to a projective resolution of the complex.
template <Field K>
PsiResult<K> psi(const BaseAlgebra<K>& alg, const Complex<K>& x, int length) {
  for (const auto& t : x.terms) require_arrow_object(t);
  auto r = resolve_complex(alg, x, length);
  return {cok_complex(r.complex), r.cut};
}

template <Field K>
struct Psi0Data {
  Rep<K> value;
  Resolution<K> resolution;  // two-step projective resolution
  RepMorphism<K> proj;       // Cok(P^0) -> value
};

template <Field K>
Psi0Data<K> psi0_data(const BaseAlgebra<K>& alg, const Rep<K>& x) {
  require_arrow_object(x);
  auto r = projective_resolution(alg, x, 1);
  auto p0 = r.complex.term(0), p1 = r.complex.term(-1);
  auto c0 = cok_object(p0);
  auto d = cok_morphism(p1, p0, r.complex.diff(-1));
  auto c = rep_cokernel(c0, d);
  return {c.rep, std::move(r), c.map};
}

/// Cokernel of Cok(P^{-1}) -> Cok(P^0) for a projective resolution P of X.
template <Field K>
Rep<K> psi0(const BaseAlgebra<K>& alg, const Rep<K>& x) {
  return psi0_data(alg, x).value;
}

/// Comparison psi0(X) -> Cok(X) induced by Cok(rho); an isomorphism when X is mono.
template <Field K>
RepMorphism<K> psi0_to_cok(const BaseAlgebra<K>& alg, const Rep<K>& x) {
  auto pd = psi0_data(alg, x);
  auto p0 = pd.resolution.complex.term(0);
  auto c = cok_morphism(p0, x, pd.resolution.rho);
  RepMorphism<K> out;
  for (std::size_t v = 0; v < 2; ++v) {
    auto q = solve(pd.proj[v].transpose(), c[v].transpose());
    if (!q) throw MathError("Cok(rho) does not factor through psi0");
    out.push_back(q->particular.transpose());
  }
  return out;
}

/// Dual construction: kernel of Ker(I^0) -> Ker(I^1) for an injective
/// coresolution X -> I^0 -> I^1, obtained by dualizing a projective
/// resolution of the dual representation. Injective arrow objects are
/// epi, so Ker applies termwise.
template <Field K>
Rep<K> psi0_inv(const BaseAlgebra<K>& alg, const Rep<K>& x) {
  require_arrow_object(x);
  auto r = projective_resolution(alg, dual_rep(x), 1);
  auto back = [&](Rep<K> t) {
    t = dual_rep(t);
    t.quiver = x.quiver;
    return t;
  };
  auto i0 = back(r.complex.term(0)), i1 = back(r.complex.term(-1));
  auto d = dual_morphism(r.complex.diff(-1));  // I^0 -> I^1
  auto k0 = ker_object(i0);
  auto kd = ker_morphism(i0, i1, d);
  return rep_kernel(k0, kd).rep;
}

/// (dim Ext^i(X, Y), dim Ext^i(psi0 X, psi0 Y)).
template <Field K>
std::pair<std::size_t, std::size_t> ext_compare(const BaseAlgebra<K>& alg, const Rep<K>& x, const Rep<K>& y, int i,
                                                int length) {
  auto a = ext_dim(alg, x, y, i, length);
  auto b = ext_dim(alg, psi0(alg, x), psi0(alg, y), i, length);
  return {a, b};
}

}  // namespace qrep
