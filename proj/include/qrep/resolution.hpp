#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qrep/complex.hpp"

namespace qrep {

/// Minimal projective cover in Rep(Q, mod-A): at each vertex the generators
/// are standard basis vectors completing x X_v + im xi_{X,v}; each generator
/// m at v contributes a copy of e_lambda^v(A) mapped by paths p to X(p)(a m).
template <Field K>
RepCover<K> projective_cover_rep(const BaseAlgebra<K>& alg, const Rep<K>& x) {
  const auto& q = x.quiver;
  const K& k = alg.field;
  auto a = free_module(alg, 1);
  std::vector<Rep<K>> parts;
  std::vector<std::pair<std::size_t, Matrix<K>>> gens;  // vertex, map A -> X_v
  for (std::size_t v = 0; v < q->vertex_count(); ++v) {
    auto rad = hstack(k, x.dim(v), {x.mods[v].op, xi(x, v).map});
    auto g = complement_basis(column_basis(rad));
    for (std::size_t c = 0; c < g.cols(); ++c) {
      parts.push_back(e_lambda(q, q->vertices()[v], a));
      gens.push_back({v, map_from_free(alg, x.mods[v], g.column(c))});
    }
  }
  if (parts.empty()) return {zero_rep(k, q), zero_morphism(zero_rep(k, q), x)};
  auto sum = rep_direct_sum(k, q, parts);
  RepMorphism<K> rho;
  for (std::size_t w = 0; w < q->vertex_count(); ++w) {
    std::vector<Matrix<K>> cols;
    for (const auto& [v, m] : gens)
      for (const auto& p : q->paths_idx(v, w)) cols.push_back(path_map(x, p) * m);
    rho.push_back(hstack(k, x.dim(w), cols));
  }
  return {sum.sum, rho};
}

enum class CoverPolicy { minimal, redundant };

/// Cover used by resolutions. The redundant policy adds one extra copy of
/// e_lambda^v(A) mapping onto the first basis vector of the first nonzero
/// vertex, giving a second, non-minimal resolution for cross-checks.
template <Field K>
RepCover<K> resolution_cover(const BaseAlgebra<K>& alg, const Rep<K>& x, CoverPolicy policy) {
  auto c = projective_cover_rep(alg, x);
  if (policy == CoverPolicy::minimal || x.is_zero()) return c;
  const auto& q = x.quiver;
  std::size_t v = 0;
  while (x.dim(v) == 0) ++v;
  Matrix<K> e(alg.field, x.dim(v), 1);
  e(0, 0) = alg.field.one();
  auto extra = e_lambda(q, q->vertices()[v], free_module(alg, 1));
  auto m = map_from_free(alg, x.mods[v], e);
  auto sum = rep_direct_sum(alg.field, q, {c.proj, extra});
  RepMorphism<K> rho;
  for (std::size_t w = 0; w < q->vertex_count(); ++w) {
    std::vector<Matrix<K>> cols{c.rho[w]};
    for (const auto& p : q->paths_idx(v, w)) cols.push_back(path_map(x, p) * m);
    rho.push_back(hstack(alg.field, x.dim(w), cols));
  }
  return {sum.sum, rho};
}

/// Projective resolution P^{-len} -> ... -> P^0 -> X with its syzygies:
/// syzygies[i] is ker(P^{-i} -> P^{-i+1}) (ker rho for i = 0) with its
/// inclusion into P^{-i}.
template <Field K>
struct Resolution {
  Complex<K> complex;
  RepMorphism<K> rho;
  std::vector<RepSub<K>> syzygies;
  int length = 0;        // number of steps computed below degree 0
  bool complete = false; // the last syzygy is zero
};

template <Field K>
Resolution<K> projective_resolution(const BaseAlgebra<K>& alg, const Rep<K>& x, int length,
                                    CoverPolicy policy = CoverPolicy::minimal) {
  if (length < 0) throw InputError("resolution length must be non-negative");
  const K& k = alg.field;
  auto q = x.quiver;
  Resolution<K> r;
  std::vector<Rep<K>> terms;  // P^0, P^{-1}, ...
  std::vector<RepMorphism<K>> diffs;  // d^{-1}, d^{-2}, ... (d^{-i}: P^{-i} -> P^{-i+1})
  RepSub<K> syz;
  if (is_projective_rep(alg, x)) {
    terms.push_back(x);
    r.rho = identity_morphism(x);
    syz = rep_kernel(x, r.rho);
  } else {
    auto c = resolution_cover(alg, x, policy);
    terms.push_back(c.proj);
    r.rho = c.rho;
    syz = rep_kernel(c.proj, c.rho);
  }
  r.syzygies.push_back(syz);
  int i = 0;
  while (i < length && !syz.rep.is_zero()) {
    ++i;
    RepCover<K> c = is_projective_rep(alg, syz.rep) ? RepCover<K>{syz.rep, identity_morphism(syz.rep)}
                                                    : resolution_cover(alg, syz.rep, policy);
    terms.push_back(c.proj);
    diffs.push_back(compose(syz.map, c.rho));
    syz = rep_kernel(c.proj, c.rho);
    r.syzygies.push_back(syz);
  }
  r.length = i;
  r.complete = syz.rep.is_zero();
  // assemble the complex in degrees -i .. 0
  Complex<K> p{k, q, -i, 0, {}, {}};
  for (int d = i; d >= 0; --d) p.terms.push_back(terms[d]);
  for (int d = i; d >= 1; --d) p.diffs.push_back(diffs[d - 1]);
  r.complex = std::move(p);
  return r;
}

/// dim Ext^i(X, Y) from a projective resolution of X of the given length.
/// Cocycles in Hom(P^{-i}, Y) are the maps vanishing on the i-th syzygy, so
/// the resolution does not have to extend past degree -i.
template <Field K>
std::size_t ext_dim_from(const BaseAlgebra<K>& alg, const Resolution<K>& r, const Rep<K>& y, int i) {
  if (i < 0) return 0;
  if (i > r.length) {
    if (r.complete) return 0;
    throw MathError("resolution of length " + std::to_string(r.length) + " is too short for Ext^" + std::to_string(i));
  }
  const auto& p = r.complex;
  auto pi = p.term(-i);
  const auto& syz = r.syzygies[i];
  LinearSystem<K> sys(alg.field);
  auto ids = add_rep_morphism_unknown(sys, pi, y);
  for (std::size_t v = 0; v < ids.size(); ++v)
    sys.add_equation(y.dim(v), syz.rep.dim(v), {{ids[v], std::nullopt, syz.map[v], false}});
  std::size_t cocycles = sys.nullity();
  if (i == 0) return cocycles;
  auto d = p.diff(-i);
  std::vector<Matrix<K>> images;
  std::size_t flat = 0;
  for (std::size_t v = 0; v < ids.size(); ++v) flat += y.dim(v) * pi.dim(v);
  for (const auto& psi : hom_rep_basis(p.term(-i + 1), y)) {
    auto g = compose(psi, d);
    Matrix<K> col(alg.field, flat, 1);
    std::size_t off = 0;
    for (const auto& m : g)
      for (std::size_t a = 0; a < m.rows(); ++a)
        for (std::size_t b = 0; b < m.cols(); ++b) col(off++, 0) = m(a, b);
    images.push_back(col);
  }
  return cocycles - rank(hstack(alg.field, flat, images));
}

template <Field K>
std::size_t ext_dim(const BaseAlgebra<K>& alg, const Rep<K>& x, const Rep<K>& y, int i, int length,
                    CoverPolicy policy = CoverPolicy::minimal) {
  return ext_dim_from(alg, projective_resolution(alg, x, length, policy), y, i);
}

/// Termwise-projective complex P with a surjective quasi-isomorphism onto X
/// in all degrees above `cut`. cut is empty when the construction terminated.
template <Field K>
struct ComplexResolution {
  Complex<K> complex;
  ChainMap<K> rho;
  std::optional<int> cut;
};

/// Top-down construction: with P^{j+1} and rho^{j+1} known,
/// W^j = {(p, x) in P^{j+1} + X^j : d p = 0, rho p = d x} is covered by P^j,
/// whose maps to P^{j+1} and X^j are the two projections. Below the window
/// X vanishes and W^j is the cycle object of P^{j+1}. Runs `length` steps
/// below lo(X).
template <Field K>
ComplexResolution<K> resolve_complex(const BaseAlgebra<K>& alg, const Complex<K>& x, int length) {
  if (length < 0) throw InputError("resolution length must be non-negative");
  if (is_termwise_projective(alg, x)) return {x, identity_chain_map(x), std::nullopt};
  const K& k = alg.field;
  auto q = x.quiver;
  std::size_t nv = q->vertex_count();
  int bottom = x.lo - length;
  std::vector<Rep<K>> ps;                   // P^{hi}, P^{hi-1}, ...
  std::vector<RepMorphism<K>> ds, rhos;     // d^j : P^j -> P^{j+1}; rho^j
  Rep<K> p_next = zero_rep(k, q);           // P^{j+1}
  RepMorphism<K> d_next = zero_morphism(p_next, zero_rep(k, q));  // d^{j+1}
  RepMorphism<K> rho_next = zero_morphism(p_next, x.term(x.hi + 1));
  bool complete = false;
  int j = x.hi;
  for (; j >= bottom; --j) {
    auto xj = x.term(j), xj1 = x.term(j + 1);
    auto s = rep_sum(p_next, xj);
    auto dx = x.diff(j);
    RepMorphism<K> phi;
    for (std::size_t v = 0; v < nv; ++v) {
      std::size_t a = p_next.dim(v), b = xj.dim(v), c = d_next[v].rows(), e = xj1.dim(v);
      Matrix<K> m(k, c + e, a + b);
      m.set_block(0, 0, d_next[v]);
      m.set_block(c, 0, rho_next[v]);
      m.set_block(c, a, -dx[v]);
      phi.push_back(std::move(m));
    }
    auto w = rep_kernel(s, phi);
    if (j < x.lo && w.rep.is_zero()) {
      complete = true;
      break;
    }
    RepCover<K> cov = is_projective_rep(alg, w.rep) ? RepCover<K>{w.rep, identity_morphism(w.rep)}
                                                    : projective_cover_rep(alg, w.rep);
    auto into_s = compose(w.map, cov.rho);
    RepMorphism<K> dj, rj;
    for (std::size_t v = 0; v < nv; ++v) {
      std::size_t a = p_next.dim(v), b = xj.dim(v);
      dj.push_back(into_s[v].block(0, a, 0, into_s[v].cols()));
      rj.push_back(into_s[v].block(a, b, 0, into_s[v].cols()));
    }
    ps.push_back(cov.proj);
    ds.push_back(dj);
    rhos.push_back(rj);
    p_next = cov.proj;
    d_next = dj;
    rho_next = rj;
  }
  int low = j + 1;  // lowest computed degree
  if (!complete) {
    // the next W would be the cycles of P^{bottom}; if they vanish we are done
    complete = rep_kernel(p_next, d_next).rep.is_zero();
  }
  Complex<K> p{k, q, low, x.hi, {}, {}};
  ChainMap<K> rho{low, {}};
  for (int t = static_cast<int>(ps.size()) - 1; t >= 0; --t) {
    p.terms.push_back(ps[t]);
    rho.maps.push_back(rhos[t]);
  }
  for (int t = static_cast<int>(ps.size()) - 1; t >= 1; --t) p.diffs.push_back(ds[t]);
  if (p.terms.empty()) {
    p = Complex<K>{k, q, x.lo, x.lo, {zero_rep(k, q)}, {}};
    rho = zero_chain_map(p, x);
  }
  return {std::move(p), std::move(rho), complete ? std::nullopt : std::optional<int>(low)};
}

/// dim H^i Hom(P, Y) for a resolution P of X: the derived Hom dimension.
/// The truncated resolution is only trusted when the missing part of P
/// cannot reach Y, i.e. cut <= lo(Y) - i - 1.
template <Field K>
std::size_t derived_hom_dim_from(const ComplexResolution<K>& r, const Complex<K>& y, int i) {
  if (r.cut && *r.cut > y.lo - i - 1)
    throw MathError("insufficient window: resolution cut at degree " + std::to_string(*r.cut) +
                    ", need at most " + std::to_string(y.lo - i - 1));
  return hom_cohomology_dim(r.complex, y, i);
}

template <Field K>
std::size_t derived_hom_dim(const BaseAlgebra<K>& alg, const Complex<K>& x, const Complex<K>& y, int i, int length) {
  return derived_hom_dim_from(resolve_complex(alg, x, length), y, i);
}

/// The chain map eta_{X,v}: X_v -> sum_{s(a)=v} X_{t(a)} of complexes of
/// modules (both over the point quiver).
template <Field K>
struct EtaComplex {
  Complex<K> source;
  Complex<K> target;
  ChainMap<K> map;
};

template <Field K>
EtaComplex<K> eta_complex(const Complex<K>& x, std::size_t v) {
  const auto& q = *x.quiver;
  EtaComplex<K> e{vertex_complex(x, v), Complex<K>{x.field, point_quiver(), x.lo, x.hi, {}, {}}, ChainMap<K>{x.lo, {}}};
  auto outs = q.out_arrows(v);
  for (int i = x.lo; i <= x.hi; ++i) {
    auto et = eta(x.term(i), v);
    e.target.terms.push_back(point_rep(et.other));
    e.map.maps.push_back({et.map});
  }
  for (int i = x.lo; i < x.hi; ++i) {
    std::vector<Matrix<K>> bl;
    for (auto a : outs) bl.push_back(x.diff(i)[q.target(a)]);
    e.target.diffs.push_back({block_diag(x.field, bl)});
  }
  return e;
}

enum class SplitMode { chain, degreewise };

/// Does the chain map f : X -> Y (complexes of modules) admit a section?
/// chain: a section that is itself a chain map; degreewise: A-linear
/// sections in each degree separately.
template <Field K>
bool chain_map_split_epi(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& f, SplitMode mode) {
  if (mode == SplitMode::degreewise) {
    for (int i = y.lo; i <= y.hi; ++i)
      if (!is_split_epi(x.term(i).mods[0], y.term(i).mods[0], component(x, y, f, i)[0])) return false;
    return true;
  }
  LinearSystem<K> sys(x.field);
  int lo = y.lo, hi = y.hi;
  std::vector<std::size_t> ids;
  for (int i = lo; i <= hi; ++i) {
    auto yi = y.term(i).mods[0], xi_ = x.term(i).mods[0];
    ids.push_back(sys.add_unknown(xi_.dim(), yi.dim()));
    add_linearity(sys, ids.back(), yi, xi_);
    sys.add_equation(yi.dim(), yi.dim(), {{ids.back(), component(x, y, f, i)[0], std::nullopt, false}},
                     Matrix<K>::identity(x.field, yi.dim()));
  }
  for (int i = lo; i <= hi; ++i) {
    // d_X s^i = s^{i+1} d_Y
    std::vector<typename LinearSystem<K>::Term> terms{{ids[i - lo], x.diff(i)[0], std::nullopt, false}};
    if (i + 1 <= hi) terms.push_back({ids[i + 1 - lo], std::nullopt, y.diff(i)[0], true});
    sys.add_equation(x.dim(i + 1, 0), y.dim(i, 0), terms);
  }
  return sys.solvable();
}

/// Vertex complexes termwise projective and eta_{X,v} split epi at every v.
template <Field K>
bool is_dgprj_op(const BaseAlgebra<K>& alg, const Complex<K>& x, SplitMode mode = SplitMode::chain) {
  for (const auto& t : x.terms)
    for (const auto& m : t.mods)
      if (!is_projective(alg, m)) return false;
  for (std::size_t v = 0; v < x.quiver->vertex_count(); ++v) {
    auto e = eta_complex(x, v);
    if (!chain_map_split_epi(e.source, e.target, e.map, mode)) return false;
  }
  return true;
}

}  // namespace qrep
