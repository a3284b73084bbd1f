#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrep/resolution.hpp"

namespace qrep {

/// Every vertex complex is termwise projective.
template <Field K>
bool is_cofibrant_cw(const BaseAlgebra<K>& alg, const Complex<K>& x) {
  for (const auto& t : x.terms)
    for (const auto& m : t.mods)
      if (!is_projective(alg, m)) return false;
  return true;
}

/// eta_{X,v} is an epimorphism in every degree at every vertex.
template <Field K>
bool is_fibrant_cw(const Complex<K>& x) {
  for (const auto& t : x.terms)
    for (std::size_t v = 0; v < t.mods.size(); ++v) {
      auto e = eta(t, v);
      if (rank(e.map) != e.map.rows()) return false;
    }
  return true;
}

template <Field K>
bool is_trivial_cw(const Complex<K>& x) {
  return is_exact(x);
}

/// Vertex complexes are projective complexes (exact, projective cycles) and
/// eta is an epimorphism at every vertex.
template <Field K>
bool is_divide_class(const BaseAlgebra<K>& alg, const Complex<K>& x) {
  for (std::size_t v = 0; v < x.quiver->vertex_count(); ++v)
    if (!is_projective_complex(alg, vertex_complex(x, v))) return false;
  return is_fibrant_cw(x);
}

/// Outcome of a replacement: the new object, the structure map, the window
/// the checks were run on, and one flag per check.
template <Field K>
struct Certificate {
  Complex<K> object;
  ChainMap<K> map;  // rho : Q -> X (cofibrant) or iota : X -> R (fibrant)
  std::optional<int> cut;
  int window_lo = 0, window_hi = 0;
  std::map<std::string, bool> flags;

  bool ok() const {
    for (const auto& [name, value] : flags)
      if (!value) return false;
    return true;
  }
};

namespace detail {

/// Per-vertex complexes of modules plus arrow maps, on a common window; the
/// working state of the vertex-by-vertex replacement constructions.
template <Field K>
struct VertexwiseComplex {
  K k;
  QuiverPtr q;
  int lo = 0, hi = 0;
  std::vector<std::vector<AModule<K>>> mods;  // [v][j - lo]
  std::vector<std::vector<Matrix<K>>> d;      // [v][j - lo] : degree j -> j+1
  std::vector<std::vector<Matrix<K>>> arr;    // [a][j - lo]
  std::vector<std::vector<Matrix<K>>> extra;  // [v][j - lo] : a map recorded alongside (rho or iota)

  std::size_t dim(std::size_t v, int j) const { return (j < lo || j > hi) ? 0 : mods[v][j - lo].dim(); }

  void grow(int new_lo, int new_hi, bool extra_is_source) {
    while (lo > new_lo) {
      --lo;
      for (std::size_t v = 0; v < mods.size(); ++v) {
        std::size_t nxt = mods[v].front().dim();
        auto ex_rows = extra_is_source ? extra[v].front().rows() : 0;
        mods[v].insert(mods[v].begin(), zero_module(k));
        d[v].insert(d[v].begin(), Matrix<K>(k, nxt, 0));
        extra[v].insert(extra[v].begin(), Matrix<K>(k, ex_rows, 0));
      }
      for (auto& a : arr) a.insert(a.begin(), Matrix<K>(k, 0, 0));
    }
    while (hi < new_hi) {
      ++hi;
      for (std::size_t v = 0; v < mods.size(); ++v) {
        mods[v].push_back(zero_module(k));
        d[v].back() = Matrix<K>(k, 0, d[v].back().cols());
        d[v].push_back(Matrix<K>(k, 0, 0));
        extra[v].push_back(Matrix<K>(k, 0, 0));
      }
      for (auto& a : arr) a.push_back(Matrix<K>(k, 0, 0));
    }
  }

  Complex<K> vertex(std::size_t v) const {
    Complex<K> c{k, point_quiver(), lo, hi, {}, {}};
    for (int j = lo; j <= hi; ++j) c.terms.push_back(point_rep(mods[v][j - lo]));
    for (int j = lo; j < hi; ++j) c.diffs.push_back({d[v][j - lo]});
    return c;
  }

  Complex<K> assemble() const {
    Complex<K> c{k, q, lo, hi, {}, {}};
    for (int j = lo; j <= hi; ++j) {
      Rep<K> r{q, {}, {}};
      for (std::size_t v = 0; v < mods.size(); ++v) r.mods.push_back(mods[v][j - lo]);
      for (std::size_t a = 0; a < arr.size(); ++a) r.maps.push_back(arr[a][j - lo]);
      c.terms.push_back(std::move(r));
    }
    for (int j = lo; j < hi; ++j) {
      RepMorphism<K> m;
      for (std::size_t v = 0; v < mods.size(); ++v) m.push_back(d[v][j - lo]);
      c.diffs.push_back(std::move(m));
    }
    return c;
  }
};

template <Field K>
struct SubComplex {
  Complex<K> complex;             // point complex
  std::vector<Matrix<K>> incl;    // [j - lo], into the ambient vertex complex
};

/// Kernel of the recorded map `extra` at vertex v (as a subcomplex).
template <Field K>
SubComplex<K> kernel_of_extra(const VertexwiseComplex<K>& w, std::size_t v) {
  SubComplex<K> s{Complex<K>{w.k, point_quiver(), w.lo, w.hi, {}, {}}, {}};
  for (int j = w.lo; j <= w.hi; ++j) {
    auto kb = kernel_basis(w.extra[v][j - w.lo]);
    s.complex.terms.push_back(point_rep(submodule(w.mods[v][j - w.lo], kb)));
    s.incl.push_back(kb);
  }
  for (int j = w.lo; j < w.hi; ++j) {
    auto sol = solve(s.incl[j + 1 - w.lo], w.d[v][j - w.lo] * s.incl[j - w.lo]);
    s.complex.diffs.push_back({sol->particular});
  }
  return s;
}

/// Identity inclusion (the whole vertex complex).
template <Field K>
SubComplex<K> whole(const VertexwiseComplex<K>& w, std::size_t v) {
  SubComplex<K> s{w.vertex(v), {}};
  for (int j = w.lo; j <= w.hi; ++j) s.incl.push_back(Matrix<K>::identity(w.k, w.dim(v, j)));
  return s;
}

/// At vertex v: if eta from sub(v) to the sum of sub(t(a)) fails to be onto
/// in some degree j, adjoin disk(cover of that sum in degree j) in degrees
/// j, j+1, mapped onto the sum (degree j) and through its differential
/// (degree j+1). The recorded map is extended by zero on the new summands.
/// Returns whether anything was adjoined.
template <Field K>
bool adjoin_cover(const BaseAlgebra<K>& alg, VertexwiseComplex<K>& w, std::size_t v, bool extra_is_source,
                  const std::function<SubComplex<K>(const VertexwiseComplex<K>&, std::size_t)>& sub) {
  const auto& q = *w.q;
  auto outs = q.out_arrows(v);
  if (outs.empty()) return false;
  const K& k = w.k;
  SubComplex<K> here = sub(w, v);
  std::vector<SubComplex<K>> succ;
  Complex<K> csum = here.complex;
  auto prepare = [&] {
    here = sub(w, v);
    succ.clear();
    std::vector<Complex<K>> parts;
    for (auto a : outs) {
      succ.push_back(sub(w, q.target(a)));
      parts.push_back(succ.back().complex);
    }
    csum = complex_direct_sum<K>(parts).sum;
  };
  prepare();
  auto cterm = [&](int j) { return csum.term(j).mods[0]; };
  std::vector<int> needy;
  for (int j = w.lo; j <= w.hi; ++j) {
    std::vector<Matrix<K>> rows;
    for (std::size_t i = 0; i < outs.size(); ++i) {
      auto img = w.arr[outs[i]][j - w.lo] * here.incl[j - w.lo];
      auto sol = solve(succ[i].incl[j - w.lo], img);
      if (!sol) throw MathError("arrow map does not preserve the subcomplex");
      rows.push_back(sol->particular);
    }
    auto e = vstack(k, here.incl[j - w.lo].cols(), rows);
    if (rank(e) != e.rows()) needy.push_back(j);
  }
  if (needy.empty()) return false;
  if (needy.back() + 1 > w.hi) {
    w.grow(w.lo, needy.back() + 1, extra_is_source);
    prepare();
  }
  // Pi = sum over needy j of disk(A^{r_j}) in degrees j, j+1
  std::vector<Complex<K>> disks;
  std::vector<Matrix<K>> covers;
  for (int j : needy) {
    auto c = projective_epi(alg, cterm(j));
    disks.push_back(disk(point_rep(c.proj), j + 1));
    covers.push_back(c.rho);
  }
  auto pi_sum = complex_direct_sum<K>(disks);
  const auto& pi = pi_sum.sum;
  // pi^i : Pi^i -> C^i
  auto pi_map = [&](int i) {
    std::vector<Matrix<K>> cols;
    for (std::size_t t = 0; t < needy.size(); ++t) {
      int j = needy[t];
      if (i == j) cols.push_back(covers[t]);
      else if (i == j + 1) cols.push_back(csum.diff(j)[0] * covers[t]);
      else cols.push_back(Matrix<K>(k, cterm(i).dim(), 0));
    }
    return hstack(k, cterm(i).dim(), cols);
  };
  // block offsets of each successor inside C
  for (int i = w.lo; i <= w.hi; ++i) {
    std::size_t add = pi.dim(i, 0);
    auto pim = pi_map(i);
    std::size_t off = 0;
    for (std::size_t s = 0; s < outs.size(); ++s) {
      std::size_t sd = succ[s].complex.dim(i, 0);
      auto comp = succ[s].incl[i - w.lo] * pim.block(off, sd, 0, add);
      off += sd;
      auto& m = w.arr[outs[s]][i - w.lo];
      m = hstack(k, m.rows(), {m, comp});
    }
    for (auto b : q.in_arrows(v)) {
      auto& m = w.arr[b][i - w.lo];
      m = vstack(k, m.cols(), {m, Matrix<K>(k, add, m.cols())});
    }
    auto& ex = w.extra[v][i - w.lo];
    if (extra_is_source) ex = hstack(k, ex.rows(), {ex, Matrix<K>(k, ex.rows(), add)});
    else ex = vstack(k, ex.cols(), {ex, Matrix<K>(k, add, ex.cols())});
    w.mods[v][i - w.lo] = direct_sum(k, {w.mods[v][i - w.lo], pi.term(i).mods[0]}).sum;
    if (i < w.hi) {
      auto& dm = w.d[v][i - w.lo];
      dm = block_diag(k, {dm, pi.diff(i)[0]});
    }
  }
  return true;
}

}  // namespace detail

/// Cofibrant replacement rho : Q -> X.
/// Step 1 resolves every vertex complex and lifts the arrow maps along the
/// (surjective, quasi-isomorphic) resolutions degree by degree from the top.
/// Step 2 walks the vertices in reverse topological order and adjoins
/// contractible projective complexes so that eta of ker(rho) becomes onto.
/// The certificate flags are recomputed from the result.
template <Field K>
Certificate<K> cofibrant_replacement(const BaseAlgebra<K>& alg, const Complex<K>& x, int length) {
  const K& k = alg.field;
  const auto& q = *x.quiver;
  std::size_t nv = q.vertex_count();
  std::vector<ComplexResolution<K>> res;
  std::optional<int> cut;
  int lo = x.lo;
  for (std::size_t v = 0; v < nv; ++v) {
    auto r = resolve_complex(alg, vertex_complex(x, v), length);
    if (r.cut) cut = cut ? std::min(*cut, *r.cut) : *r.cut;
    lo = std::min(lo, r.complex.lo);
    res.push_back(std::move(r));
  }
  detail::VertexwiseComplex<K> w{k, x.quiver, lo, x.hi, {}, {}, {}, {}};
  for (std::size_t v = 0; v < nv; ++v) {
    const auto& p = res[v].complex;
    w.mods.emplace_back();
    w.d.emplace_back();
    w.extra.emplace_back();
    for (int j = lo; j <= x.hi; ++j) {
      w.mods[v].push_back(p.term(j).mods[0]);
      w.d[v].push_back(p.diff(j)[0]);
      w.extra[v].push_back(component(p, vertex_complex(x, v), res[v].rho, j)[0]);
    }
  }
  // lift arrows: rho_t F = X(a) rho_s and d_t F = F^{j+1} d_s
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto s = q.source(a), t = q.target(a);
    std::vector<Matrix<K>> lifts(x.hi - lo + 1);
    for (int j = x.hi; j >= lo; --j) {
      LinearSystem<K> sys(k);
      auto f = sys.add_unknown(w.dim(t, j), w.dim(s, j));
      add_linearity(sys, f, w.mods[s][j - lo], w.mods[t][j - lo]);
      auto xa = x.term(j).maps[a];
      sys.add_equation(x.dim(j, t), w.dim(s, j), {{f, w.extra[t][j - lo], std::nullopt, false}},
                       xa * w.extra[s][j - lo]);
      if (j < x.hi) {
        sys.add_equation(w.dim(t, j + 1), w.dim(s, j), {{f, w.d[t][j - lo], std::nullopt, false}},
                         lifts[j + 1 - lo] * w.d[s][j - lo]);
      }
      auto sol = sys.solve();
      if (!sol) throw MathError("cannot lift arrow '" + q.arrows()[a].id + "' in degree " + std::to_string(j) +
                                "; the resolution window is too small");
      lifts[j - lo] = sol->particular[0];
    }
    w.arr.push_back(std::move(lifts));
  }
  // Step 2
  for (int vid : q.reverse_topological_order()) {
    auto v = q.vertex_index(vid);
    detail::adjoin_cover<K>(alg, w, v, true, detail::kernel_of_extra<K>);
  }
  Certificate<K> cert;
  cert.object = w.assemble();
  cert.map = ChainMap<K>{w.lo, {}};
  for (int j = w.lo; j <= w.hi; ++j) {
    RepMorphism<K> m;
    for (std::size_t v = 0; v < nv; ++v) m.push_back(w.extra[v][j - w.lo]);
    cert.map.maps.push_back(std::move(m));
  }
  cert.cut = cut;
  cert.window_lo = cut ? *cut : w.lo;
  cert.window_hi = w.hi;
  // independent re-validation
  const auto& qx = cert.object;
  cert.flags["complex"] = is_complex(qx);
  cert.flags["cofibrant"] = is_cofibrant_cw(alg, qx);
  cert.flags["chain_map"] = is_chain_map(qx, x, cert.map);
  bool epi = true;
  for (int j = qx.lo; j <= qx.hi; ++j) epi = epi && is_epi(component(qx, x, cert.map, j));
  cert.flags["rho_epi"] = epi;
  Complex<K> ker{k, x.quiver, qx.lo, qx.hi, {}, {}};
  std::vector<RepMorphism<K>> incl;
  for (int j = qx.lo; j <= qx.hi; ++j) {
    auto kr = rep_kernel(qx.term(j), component(qx, x, cert.map, j));
    ker.terms.push_back(kr.rep);
    incl.push_back(kr.map);
  }
  for (int j = qx.lo; j < qx.hi; ++j) {
    RepMorphism<K> m;
    auto dq = qx.diff(j);
    for (std::size_t v = 0; v < nv; ++v)
      m.push_back(solve(incl[j + 1 - qx.lo][v], dq[v] * incl[j - qx.lo][v])->particular);
    ker.diffs.push_back(std::move(m));
  }
  bool exact = true;
  for (int j = (cut ? *cut + 1 : qx.lo); j <= qx.hi; ++j) exact = exact && is_exact_at(ker, j);
  cert.flags["kernel_exact"] = exact;
  cert.flags["kernel_eta_epi"] = is_fibrant_cw(ker);
  auto c = cone(qx, x, cert.map);
  bool qi = true;
  for (int j = (cut ? *cut + 1 : c.lo); j <= c.hi; ++j) qi = qi && is_exact_at(c, j);
  cert.flags["quasi_iso"] = qi;
  return cert;
}

/// Fibrant replacement iota : X -> R: in reverse topological order, adjoin
/// contractible projective complexes covering the sum over outgoing arrows
/// wherever eta fails to be onto, and push out along them.
template <Field K>
Certificate<K> fibrant_replacement(const BaseAlgebra<K>& alg, const Complex<K>& x) {
  const K& k = alg.field;
  const auto& q = *x.quiver;
  std::size_t nv = q.vertex_count();
  detail::VertexwiseComplex<K> w{k, x.quiver, x.lo, x.hi, {}, {}, {}, {}};
  for (std::size_t v = 0; v < nv; ++v) {
    w.mods.emplace_back();
    w.d.emplace_back();
    w.extra.emplace_back();
    for (int j = x.lo; j <= x.hi; ++j) {
      w.mods[v].push_back(x.term(j).mods[v]);
      w.d[v].push_back(x.diff(j)[v]);
      w.extra[v].push_back(Matrix<K>::identity(k, x.dim(j, v)));
    }
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    w.arr.emplace_back();
    for (int j = x.lo; j <= x.hi; ++j) w.arr[a].push_back(x.term(j).maps[a]);
  }
  for (int vid : q.reverse_topological_order()) {
    auto v = q.vertex_index(vid);
    detail::adjoin_cover<K>(alg, w, v, false, detail::whole<K>);
  }
  Certificate<K> cert;
  cert.object = w.assemble();
  cert.map = ChainMap<K>{x.lo, {}};
  for (int j = x.lo; j <= x.hi; ++j) {
    RepMorphism<K> m;
    for (std::size_t v = 0; v < nv; ++v) m.push_back(w.extra[v][j - w.lo]);
    cert.map.maps.push_back(std::move(m));
  }
  cert.window_lo = w.lo;
  cert.window_hi = w.hi;
  const auto& rx = cert.object;
  cert.flags["complex"] = is_complex(rx);
  cert.flags["fibrant"] = is_fibrant_cw(rx);
  cert.flags["chain_map"] = is_chain_map(x, rx, cert.map);
  bool mono = true;
  for (int j = x.lo; j <= x.hi; ++j) mono = mono && is_mono(component(x, rx, cert.map, j));
  cert.flags["iota_mono"] = mono;
  Complex<K> cok{k, x.quiver, rx.lo, rx.hi, {}, {}};
  std::vector<RepMorphism<K>> proj;
  for (int j = rx.lo; j <= rx.hi; ++j) {
    auto c = rep_cokernel(rx.term(j), component(x, rx, cert.map, j));
    cok.terms.push_back(c.rep);
    proj.push_back(c.map);
  }
  for (int j = rx.lo; j < rx.hi; ++j) {
    RepMorphism<K> m;
    auto dr = rx.diff(j);
    for (std::size_t v = 0; v < nv; ++v) {
      // induced map on quotients: proj^{j+1} d lift^j, lift = right inverse of proj^j
      auto pj = proj[j - rx.lo][v];
      auto lift = solve(pj, Matrix<K>::identity(k, pj.rows()))->particular;
      m.push_back(proj[j + 1 - rx.lo][v] * dr[v] * lift);
    }
    cok.diffs.push_back(std::move(m));
  }
  bool tp = true, ex = true;
  for (std::size_t v = 0; v < nv; ++v) {
    auto vc = vertex_complex(cok, v);
    for (const auto& t : vc.terms) tp = tp && is_projective(alg, t.mods[0]);
    ex = ex && is_exact(vc);
  }
  cert.flags["cokernel_termwise_projective"] = tp;
  cert.flags["cokernel_exact"] = ex;
  return cert;
}

/// I(X): I^n = X^n + X^{n+1}, d(a, b) = (b, 0). For X cofibrant and fibrant
/// it lies in the divide class; alpha = (id, d_X) : X -> I(X).
template <Field K>
struct DivideObject {
  Complex<K> object;
  ChainMap<K> alpha;
};

template <Field K>
DivideObject<K> divide_object(const Complex<K>& x) {
  const K& k = x.field;
  std::size_t nv = x.quiver->vertex_count();
  Complex<K> c{k, x.quiver, x.lo - 1, x.hi, {}, {}};
  for (int n = c.lo; n <= c.hi; ++n) c.terms.push_back(rep_sum(x.term(n), x.term(n + 1)));
  for (int n = c.lo; n < c.hi; ++n) {
    RepMorphism<K> d;
    for (std::size_t v = 0; v < nv; ++v) {
      std::size_t a0 = x.dim(n, v), b0 = x.dim(n + 1, v), a1 = x.dim(n + 1, v), b1 = x.dim(n + 2, v);
      Matrix<K> m(k, a1 + b1, a0 + b0);
      m.set_block(0, a0, Matrix<K>::identity(k, b0));
      d.push_back(std::move(m));
    }
    c.diffs.push_back(std::move(d));
  }
  ChainMap<K> alpha{x.lo, {}};
  for (int n = x.lo; n <= x.hi; ++n) {
    RepMorphism<K> m;
    auto dx = x.diff(n);
    for (std::size_t v = 0; v < nv; ++v)
      m.push_back(vstack(k, x.dim(n, v), {Matrix<K>::identity(k, x.dim(n, v)), dx[v]}));
    alpha.maps.push_back(std::move(m));
  }
  return {std::move(c), std::move(alpha)};
}

/// A chain map beta : I(X) -> Y with beta alpha = h, if one exists.
template <Field K>
std::optional<ChainMap<K>> factor_through_divide(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& h) {
  auto dob = divide_object(x);
  const auto& ix = dob.object;
  std::size_t nv = x.quiver->vertex_count();
  LinearSystem<K> sys(x.field);
  std::vector<std::vector<std::size_t>> ids;
  for (int n = ix.lo; n <= ix.hi; ++n) ids.push_back(add_rep_morphism_unknown(sys, ix.term(n), y.term(n)));
  for (int n = ix.lo; n <= ix.hi; ++n) {
    auto di = ix.diff(n), dy = y.diff(n);
    for (std::size_t v = 0; v < nv; ++v) {
      // d_Y beta^n = beta^{n+1} d_I
      std::vector<typename LinearSystem<K>::Term> t{{ids[n - ix.lo][v], dy[v], std::nullopt, false}};
      if (n + 1 <= ix.hi) t.push_back({ids[n + 1 - ix.lo][v], std::nullopt, di[v], true});
      sys.add_equation(y.dim(n + 1, v), ix.dim(n, v), t);
    }
  }
  for (int n = x.lo; n <= x.hi; ++n) {
    auto al = dob.alpha.maps[n - x.lo];
    auto hn = component(x, y, h, n);
    for (std::size_t v = 0; v < nv; ++v)
      sys.add_equation(y.dim(n, v), x.dim(n, v), {{ids[n - ix.lo][v], std::nullopt, al[v], false}}, hn[v]);
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  ChainMap<K> beta{ix.lo, {}};
  for (int n = ix.lo; n <= ix.hi; ++n) {
    RepMorphism<K> m;
    for (std::size_t v = 0; v < nv; ++v) m.push_back(sol->particular[ids[n - ix.lo][v]]);
    beta.maps.push_back(std::move(m));
  }
  return beta;
}

/// beta^n = (d_Y s^n, s^{n+1}) built from a homotopy s with h = ds + sd.
template <Field K>
ChainMap<K> factorization_from_homotopy(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& s) {
  std::size_t nv = x.quiver->vertex_count();
  auto sn = [&](int n) {
    if (n >= s.lo && n < s.lo + static_cast<int>(s.maps.size())) return s.maps[n - s.lo];
    return zero_morphism(x.term(n), y.term(n - 1));
  };
  ChainMap<K> beta{x.lo - 1, {}};
  for (int n = x.lo - 1; n <= x.hi; ++n) {
    RepMorphism<K> m;
    auto a = compose(y.diff(n - 1), sn(n));
    auto b = sn(n + 1);
    for (std::size_t v = 0; v < nv; ++v) m.push_back(hstack(x.field, y.dim(n, v), {a[v], b[v]}));
    beta.maps.push_back(std::move(m));
  }
  return beta;
}

/// s^n = beta^{n-1} restricted to the X^n summand of I(X)^{n-1}; a homotopy
/// for beta alpha whenever beta is a chain map I(X) -> Y.
template <Field K>
ChainMap<K> homotopy_from_factorization(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& beta) {
  std::size_t nv = x.quiver->vertex_count();
  ChainMap<K> s{x.lo, {}};
  for (int n = x.lo; n <= x.hi; ++n) {
    int idx = n - 1 - beta.lo;
    RepMorphism<K> m;
    for (std::size_t v = 0; v < nv; ++v) {
      std::size_t a = x.dim(n - 1, v), b = x.dim(n, v);
      if (idx < 0 || idx >= static_cast<int>(beta.maps.size())) m.push_back(Matrix<K>(x.field, y.dim(n - 1, v), b));
      else m.push_back(beta.maps[idx][v].block(0, y.dim(n - 1, v), a, b));
    }
    s.maps.push_back(std::move(m));
  }
  return s;
}

template <Field K>
struct HomotopyVerdict {
  bool homotopic = false;
  std::optional<ChainMap<K>> homotopy;       // from the chain-homotopy solver
  std::optional<ChainMap<K>> factorization;  // beta : I(X) -> Y with beta alpha = f - g
};

/// Homotopy of maps between cofibrant-fibrant objects, decided by the chain
/// homotopy solver; a factorization of f - g through I(X) is produced from
/// the homotopy when one exists.
template <Field K>
HomotopyVerdict<K> homotopic_cw(const BaseAlgebra<K>& alg, const Complex<K>& x, const Complex<K>& y,
                                const ChainMap<K>& f, const ChainMap<K>& g) {
  if (!is_cofibrant_cw(alg, x) || !is_fibrant_cw(x)) throw InputError("source is not cofibrant and fibrant");
  if (!is_cofibrant_cw(alg, y) || !is_fibrant_cw(y)) throw InputError("target is not cofibrant and fibrant");
  HomotopyVerdict<K> out;
  out.homotopy = homotopic(x, y, f, g);
  out.homotopic = out.homotopy.has_value();
  if (out.homotopy) out.factorization = factorization_from_homotopy(x, y, *out.homotopy);
  return out;
}

/// dim of chain maps QX -> RY modulo homotopy, from certified replacements.
template <Field K>
std::size_t homotopy_category_hom_dim_from(const Certificate<K>& qx, const Certificate<K>& ry) {
  if (!qx.ok()) throw MathError("cofibrant replacement failed its certificate");
  if (!ry.ok()) throw MathError("fibrant replacement failed its certificate");
  if (qx.cut && *qx.cut > ry.object.lo - 1)
    throw MathError("insufficient window: replacement cut at degree " + std::to_string(*qx.cut) + ", need at most " +
                    std::to_string(ry.object.lo - 1));
  return hom_cohomology_dim(qx.object, ry.object, 0);
}

template <Field K>
std::size_t homotopy_category_hom_dim(const BaseAlgebra<K>& alg, const Complex<K>& x, const Complex<K>& y,
                                      int length) {
  return homotopy_category_hom_dim_from(cofibrant_replacement(alg, x, length), fibrant_replacement(alg, y));
}

}  // namespace qrep
