#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "qrep/complex.hpp"

namespace qrep {

/// dim Ext^1(X, Y) in the abelian category of complexes of representations,
/// computed from extensions directly: an extension E has E = Y + X in every
/// degree and at every vertex, and every structure map (x-action, arrow,
/// differential) is block upper triangular with off-diagonal block delta.
/// The defining relations of E are linear in the deltas; extensions split
/// exactly when delta(g) = Y_g h - h X_g for a graded family h.
/// So dim Ext^1 = dim(cocycles) - (dim h-space - dim Hom(X, Y)).
template <Field K>
std::size_t ext1_complex_dim(const BaseAlgebra<K>& alg, const Complex<K>& x, const Complex<K>& y) {
  const K& k = alg.field;
  const auto& q = *x.quiver;
  std::size_t nv = q.vertex_count(), na = q.arrow_count();
  int lo = std::min(x.lo, y.lo), hi = std::max(x.hi, y.hi);
  int w = hi - lo + 1;
  using Term = typename LinearSystem<K>::Term;
  LinearSystem<K> sys(k);
  // unknown ids: dn[j][v], da[j][a], dd[j][v] (d from degree j to j+1)
  std::vector<std::vector<std::size_t>> dn(w), da(w), dd(w);
  for (int j = lo; j <= hi; ++j) {
    for (std::size_t v = 0; v < nv; ++v) dn[j - lo].push_back(sys.add_unknown(y.dim(j, v), x.dim(j, v)));
    for (std::size_t a = 0; a < na; ++a)
      da[j - lo].push_back(sys.add_unknown(y.dim(j, q.target(a)), x.dim(j, q.source(a))));
    for (std::size_t v = 0; v < nv; ++v) dd[j - lo].push_back(sys.add_unknown(y.dim(j + 1, v), x.dim(j, v)));
  }
  auto xn = [&](int j, std::size_t v) { return x.term(j).mods[v].op; };
  auto yn = [&](int j, std::size_t v) { return y.term(j).mods[v].op; };
  for (int j = lo; j <= hi; ++j) {
    int r = j - lo;
    for (std::size_t v = 0; v < nv; ++v) {
      // x^n = 0
      std::vector<Term> t;
      for (int i = 0; i < alg.n; ++i) t.push_back({dn[r][v], power(yn(j, v), i), power(xn(j, v), alg.n - 1 - i), false});
      sys.add_equation(y.dim(j, v), x.dim(j, v), t);
      // d x = x d
      if (j + 1 <= hi)
        sys.add_equation(y.dim(j + 1, v), x.dim(j, v),
                         {{dn[r][v], y.diff(j)[v], std::nullopt, false},
                          {dd[r][v], std::nullopt, xn(j, v), false},
                          {dd[r][v], yn(j + 1, v), std::nullopt, true},
                          {dn[r + 1][v], std::nullopt, x.diff(j)[v], true}});
      // d d = 0
      if (j + 1 <= hi)
        sys.add_equation(y.dim(j + 2, v), x.dim(j, v),
                         {{dd[r][v], y.diff(j + 1)[v], std::nullopt, false},
                          {dd[r + 1][v], std::nullopt, x.diff(j)[v], false}});
    }
    for (std::size_t a = 0; a < na; ++a) {
      auto s = q.source(a), t = q.target(a);
      auto xa = x.term(j).maps[a], ya = y.term(j).maps[a];
      // a x = x a
      sys.add_equation(y.dim(j, t), x.dim(j, s),
                       {{dn[r][s], ya, std::nullopt, false},
                        {da[r][a], std::nullopt, xn(j, s), false},
                        {da[r][a], yn(j, t), std::nullopt, true},
                        {dn[r][t], std::nullopt, xa, true}});
      // d a = a d
      std::vector<Term> terms{{da[r][a], y.diff(j)[t], std::nullopt, false},
                              {dd[r][t], std::nullopt, xa, false},
                              {dd[r][s], y.term(j + 1).maps[a], std::nullopt, true}};
      if (j + 1 <= hi) terms.push_back({da[r + 1][a], std::nullopt, x.diff(j)[s], true});
      sys.add_equation(y.dim(j + 1, t), x.dim(j, s), terms);
    }
  }
  std::size_t cocycles = sys.nullity();
  std::size_t hspace = 0;
  for (int j = lo; j <= hi; ++j)
    for (std::size_t v = 0; v < nv; ++v) hspace += x.dim(j, v) * y.dim(j, v);
  LinearSystem<K> hom(k);
  std::vector<std::vector<std::size_t>> ids;
  for (int j = lo; j <= hi; ++j) ids.push_back(add_rep_morphism_unknown(hom, x.term(j), y.term(j)));
  for (int j = lo; j < hi; ++j)
    for (std::size_t v = 0; v < nv; ++v)
      hom.add_equation(y.dim(j + 1, v), x.dim(j, v),
                       {{ids[j - lo][v], y.diff(j)[v], std::nullopt, false},
                        {ids[j + 1 - lo][v], std::nullopt, x.diff(j)[v], true}});
  return cocycles - (hspace - hom.nullity());
}

}  // namespace qrep
