#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "qrep/module.hpp"
#include "qrep/quiver.hpp"

namespace qrep {

/// A representation of a quiver in A-modules. mods is indexed by vertex
/// index, maps by arrow index; maps[a] : mods[s(a)] -> mods[t(a)].
template <Field K>
struct Rep {
  QuiverPtr quiver;
  std::vector<AModule<K>> mods;
  std::vector<Matrix<K>> maps;

  const AModule<K>& at(std::size_t v) const { return mods[v]; }
  std::size_t dim(std::size_t v) const { return mods[v].dim(); }
  std::size_t total_dim() const {
    std::size_t d = 0;
    for (const auto& m : mods) d += m.dim();
    return d;
  }
  bool is_zero() const { return total_dim() == 0; }
  bool operator==(const Rep& o) const {
    return *quiver == *o.quiver && mods == o.mods && maps == o.maps;
  }
};

/// Natural transformation: one matrix per vertex index.
template <Field K>
using RepMorphism = std::vector<Matrix<K>>;

template <Field K>
Rep<K> make_rep(const BaseAlgebra<K>& alg, QuiverPtr q, std::vector<AModule<K>> mods, std::vector<Matrix<K>> maps) {
  if (mods.size() != q->vertex_count()) throw ShapeError("representation: wrong number of vertex modules");
  if (maps.size() != q->arrow_count()) throw ShapeError("representation: wrong number of arrow maps");
  for (auto& m : mods) m = make_module(alg, m.op);
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const auto& s = mods[q->source(a)];
    const auto& t = mods[q->target(a)];
    if (maps[a].rows() != t.dim() || maps[a].cols() != s.dim())
      throw ShapeError("representation: arrow '" + q->arrows()[a].id + "' has shape " + maps[a].shape());
    if (!is_module_hom(s, t, maps[a]))
      throw InputError("representation: arrow '" + q->arrows()[a].id + "' is not A-linear");
  }
  return {std::move(q), std::move(mods), std::move(maps)};
}

template <Field K>
Rep<K> zero_rep(const K& k, QuiverPtr q) {
  Rep<K> r{q, std::vector<AModule<K>>(q->vertex_count(), zero_module(k)), {}};
  for (std::size_t a = 0; a < q->arrow_count(); ++a) r.maps.emplace_back(k, 0, 0);
  return r;
}

/// A module viewed as a representation of the point quiver.
template <Field K>
Rep<K> point_rep(const AModule<K>& m) {
  return {point_quiver(), {m}, {}};
}

template <Field K>
const AModule<K>& eval(const Rep<K>& x, int v) {
  return x.mods[x.quiver->vertex_index(v)];
}

template <Field K>
RepMorphism<K> identity_morphism(const Rep<K>& x) {
  RepMorphism<K> f;
  for (const auto& m : x.mods) f.push_back(Matrix<K>::identity(m.field(), m.dim()));
  return f;
}

template <Field K>
RepMorphism<K> zero_morphism(const Rep<K>& x, const Rep<K>& y) {
  RepMorphism<K> f;
  for (std::size_t v = 0; v < x.mods.size(); ++v) f.emplace_back(x.mods[v].field(), y.dim(v), x.dim(v));
  return f;
}

template <Field K>
RepMorphism<K> compose(const RepMorphism<K>& g, const RepMorphism<K>& f) {
  RepMorphism<K> h;
  for (std::size_t v = 0; v < f.size(); ++v) h.push_back(g[v] * f[v]);
  return h;
}

template <Field K>
RepMorphism<K> add(const RepMorphism<K>& g, const RepMorphism<K>& f) {
  RepMorphism<K> h;
  for (std::size_t v = 0; v < f.size(); ++v) h.push_back(g[v] + f[v]);
  return h;
}

template <Field K>
RepMorphism<K> subtract(const RepMorphism<K>& g, const RepMorphism<K>& f) {
  RepMorphism<K> h;
  for (std::size_t v = 0; v < f.size(); ++v) h.push_back(g[v] - f[v]);
  return h;
}

template <Field K>
RepMorphism<K> negate(const RepMorphism<K>& f) {
  RepMorphism<K> h;
  for (const auto& m : f) h.push_back(-m);
  return h;
}

template <Field K>
bool is_zero_morphism(const RepMorphism<K>& f) {
  for (const auto& m : f)
    if (!m.is_zero()) return false;
  return true;
}

template <Field K>
bool is_rep_morphism(const Rep<K>& x, const Rep<K>& y, const RepMorphism<K>& f) {
  if (f.size() != x.mods.size()) return false;
  for (std::size_t v = 0; v < f.size(); ++v)
    if (!is_module_hom(x.mods[v], y.mods[v], f[v])) return false;
  const auto& q = *x.quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    if (!(y.maps[a] * f[q.source(a)] == f[q.target(a)] * x.maps[a])) return false;
  return true;
}

template <Field K>
bool is_epi(const RepMorphism<K>& f) {
  for (const auto& m : f)
    if (rank(m) != m.rows()) return false;
  return true;
}

template <Field K>
bool is_mono(const RepMorphism<K>& f) {
  for (const auto& m : f)
    if (rank(m) != m.cols()) return false;
  return true;
}

template <Field K>
bool is_iso(const RepMorphism<K>& f) {
  for (const auto& m : f)
    if (m.rows() != m.cols() || rank(m) != m.rows()) return false;
  return true;
}

/// Register unknowns for a morphism X -> Y (one block per vertex) together
/// with A-linearity and the commuting squares. Returns the unknown ids.
template <Field K>
std::vector<std::size_t> add_rep_morphism_unknown(LinearSystem<K>& sys, const Rep<K>& x, const Rep<K>& y) {
  std::vector<std::size_t> ids;
  for (std::size_t v = 0; v < x.mods.size(); ++v) {
    ids.push_back(sys.add_unknown(y.dim(v), x.dim(v)));
    add_linearity(sys, ids.back(), x.mods[v], y.mods[v]);
  }
  const auto& q = *x.quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto s = q.source(a), t = q.target(a);
    // Y(a) F_s - F_t X(a) = 0
    sys.add_equation(y.dim(t), x.dim(s),
                     {{ids[s], y.maps[a], std::nullopt, false}, {ids[t], std::nullopt, x.maps[a], true}});
  }
  return ids;
}

template <Field K>
std::vector<RepMorphism<K>> hom_rep_basis(const Rep<K>& x, const Rep<K>& y) {
  LinearSystem<K> sys(x.mods[0].field());
  add_rep_morphism_unknown(sys, x, y);
  auto r = sys.solve();
  return r->kernel;
}

template <Field K>
std::size_t hom_rep_dim(const Rep<K>& x, const Rep<K>& y) {
  LinearSystem<K> sys(x.mods[0].field());
  add_rep_morphism_unknown(sys, x, y);
  return sys.nullity();
}

/// X(p) for a path p (identity for a trivial path).
template <Field K>
Matrix<K> path_map(const Rep<K>& x, const Path& p) {
  const auto& q = *x.quiver;
  Matrix<K> m = Matrix<K>::identity(x.mods[0].field(), x.dim(q.vertex_index(p.start)));
  for (auto a : p.arrows) m = x.maps[a] * m;
  return m;
}

/// Left adjoint of evaluation at v: (e_lambda M)_w = sum over paths v -> w.
template <Field K>
Rep<K> e_lambda(QuiverPtr q, int v, const AModule<K>& m) {
  const K& k = m.field();
  std::size_t nv = q->vertex_count();
  std::vector<std::vector<Path>> ps(nv);
  std::vector<AModule<K>> mods;
  for (std::size_t w = 0; w < nv; ++w) {
    ps[w] = q->paths(v, q->vertices()[w]);
    mods.push_back(direct_sum(k, std::vector<AModule<K>>(ps[w].size(), m)).sum);
  }
  std::vector<Matrix<K>> maps;
  std::size_t d = m.dim();
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    auto s = q->source(a), t = q->target(a);
    Matrix<K> f(k, mods[t].dim(), mods[s].dim());
    for (std::size_t i = 0; i < ps[s].size(); ++i) {
      Path ext = ps[s][i];
      ext.arrows.push_back(a);
      ext.end = q->vertices()[t];
      for (std::size_t j = 0; j < ps[t].size(); ++j)
        if (ps[t][j] == ext) f.set_block(j * d, i * d, Matrix<K>::identity(k, d));
    }
    maps.push_back(std::move(f));
  }
  return {q, std::move(mods), std::move(maps)};
}

/// Right adjoint of evaluation at v: (e_rho M)_w = product over paths w -> v.
template <Field K>
Rep<K> e_rho(QuiverPtr q, int v, const AModule<K>& m) {
  const K& k = m.field();
  std::size_t nv = q->vertex_count();
  std::vector<std::vector<Path>> ps(nv);
  std::vector<AModule<K>> mods;
  for (std::size_t w = 0; w < nv; ++w) {
    ps[w] = q->paths(q->vertices()[w], v);
    mods.push_back(direct_sum(k, std::vector<AModule<K>>(ps[w].size(), m)).sum);
  }
  std::vector<Matrix<K>> maps;
  std::size_t d = m.dim();
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    auto s = q->source(a), t = q->target(a);
    Matrix<K> f(k, mods[t].dim(), mods[s].dim());
    // output component q (a path t -> v) reads input component q . a
    for (std::size_t j = 0; j < ps[t].size(); ++j) {
      Path pre = ps[t][j];
      pre.arrows.insert(pre.arrows.begin(), a);
      pre.start = q->vertices()[s];
      for (std::size_t i = 0; i < ps[s].size(); ++i)
        if (ps[s][i] == pre) f.set_block(j * d, i * d, Matrix<K>::identity(k, d));
    }
    maps.push_back(std::move(f));
  }
  return {q, std::move(mods), std::move(maps)};
}

template <Field K>
struct VertexMap {
  AModule<K> other;  // the sum module on the far side
  Matrix<K> map;
};

/// eta_{X,v}: X_v -> sum over arrows a with s(a)=v of X_{t(a)}, the
/// component at a being X(a). Summands ordered by arrow id.
template <Field K>
VertexMap<K> eta(const Rep<K>& x, std::size_t v) {
  const auto& q = *x.quiver;
  const K& k = x.mods[v].field();
  std::vector<AModule<K>> parts;
  std::vector<Matrix<K>> rows;
  for (auto a : q.out_arrows(v)) {
    parts.push_back(x.mods[q.target(a)]);
    rows.push_back(x.maps[a]);
  }
  return {direct_sum(k, parts).sum, vstack(k, x.dim(v), rows)};
}

/// xi_{X,v}: sum over arrows a with t(a)=v of X_{s(a)} -> X_v.
template <Field K>
VertexMap<K> xi(const Rep<K>& x, std::size_t v) {
  const auto& q = *x.quiver;
  const K& k = x.mods[v].field();
  std::vector<AModule<K>> parts;
  std::vector<Matrix<K>> cols;
  for (auto a : q.in_arrows(v)) {
    parts.push_back(x.mods[q.source(a)]);
    cols.push_back(x.maps[a]);
  }
  return {direct_sum(k, parts).sum, hstack(k, x.dim(v), cols)};
}

/// Subrepresentation on N-stable, arrow-stable subspaces (independent
/// columns incl[v] per vertex).
template <Field K>
Rep<K> subrep(const Rep<K>& x, const RepMorphism<K>& incl) {
  Rep<K> r{x.quiver, {}, {}};
  for (std::size_t v = 0; v < incl.size(); ++v) r.mods.push_back(submodule(x.mods[v], incl[v]));
  const auto& q = *x.quiver;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    auto s = solve(incl[q.target(a)], x.maps[a] * incl[q.source(a)]);
    if (!s) throw MathError("subspace is not stable under arrow maps");
    r.maps.push_back(s->particular);
  }
  return r;
}

template <Field K>
struct RepSub {
  Rep<K> rep;
  RepMorphism<K> map;  // inclusion or projection
};

template <Field K>
RepSub<K> rep_kernel(const Rep<K>& x, const RepMorphism<K>& f) {
  RepMorphism<K> incl;
  for (const auto& m : f) incl.push_back(kernel_basis(m));
  return {subrep(x, incl), incl};
}

template <Field K>
RepSub<K> rep_image(const Rep<K>& y, const RepMorphism<K>& f) {
  RepMorphism<K> incl;
  for (std::size_t v = 0; v < f.size(); ++v) incl.push_back(column_basis(f[v]));
  return {subrep(y, incl), incl};
}

/// Quotient of x by the arrow-stable subspaces spanned by s[v].
template <Field K>
RepSub<K> rep_quotient(const Rep<K>& x, const RepMorphism<K>& s) {
  const auto& q = *x.quiver;
  std::vector<Quotient<K>> qs;
  Rep<K> r{x.quiver, {}, {}};
  RepMorphism<K> proj;
  for (std::size_t v = 0; v < s.size(); ++v) {
    qs.push_back(quotient_by(s[v]));
    r.mods.push_back(AModule<K>(qs[v].proj * x.mods[v].op * qs[v].lift));
    proj.push_back(qs[v].proj);
  }
  for (std::size_t a = 0; a < q.arrow_count(); ++a)
    r.maps.push_back(qs[q.target(a)].proj * x.maps[a] * qs[q.source(a)].lift);
  return {std::move(r), std::move(proj)};
}

template <Field K>
RepSub<K> rep_cokernel(const Rep<K>& y, const RepMorphism<K>& f) {
  return rep_quotient(y, f);
}

template <Field K>
struct RepSum {
  Rep<K> sum;
  std::vector<RepMorphism<K>> inj;
  std::vector<RepMorphism<K>> proj;
};

template <Field K>
RepSum<K> rep_direct_sum(const K& k, QuiverPtr q, const std::vector<Rep<K>>& parts) {
  RepSum<K> out{Rep<K>{q, {}, {}}, std::vector<RepMorphism<K>>(parts.size()),
                std::vector<RepMorphism<K>>(parts.size())};
  for (std::size_t v = 0; v < q->vertex_count(); ++v) {
    std::vector<AModule<K>> ms;
    for (const auto& p : parts) ms.push_back(p.mods[v]);
    auto s = direct_sum(k, ms);
    out.sum.mods.push_back(s.sum);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      out.inj[i].push_back(s.inj[i]);
      out.proj[i].push_back(s.proj[i]);
    }
  }
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    std::vector<Matrix<K>> bl;
    for (const auto& p : parts) bl.push_back(p.maps[a]);
    out.sum.maps.push_back(block_diag(k, bl));
  }
  return out;
}

template <Field K>
Rep<K> rep_sum(const Rep<K>& x, const Rep<K>& y) {
  return rep_direct_sum(x.mods[0].field(), x.quiver, {x, y}).sum;
}

/// Membership in (Q, F): every vertex module satisfies pred.
template <Field K>
bool in_class(const Rep<K>& x, const std::function<bool(const AModule<K>&)>& pred) {
  for (const auto& m : x.mods)
    if (!pred(m)) return false;
  return true;
}

/// Projective objects of Rep(Q, mod-A): xi_{X,v} mono with projective
/// cokernel at every vertex.
template <Field K>
bool is_projective_rep(const BaseAlgebra<K>& alg, const Rep<K>& x) {
  for (std::size_t v = 0; v < x.mods.size(); ++v) {
    auto m = xi(x, v);
    if (rank(m.map) != m.map.cols()) return false;
    if (!is_projective(alg, cokernel(x.mods[v], m.map).module)) return false;
  }
  return true;
}

/// Injective objects: eta_{X,v} epi with injective kernel at every vertex.
template <Field K>
bool is_injective_rep(const BaseAlgebra<K>& alg, const Rep<K>& x) {
  for (std::size_t v = 0; v < x.mods.size(); ++v) {
    auto m = eta(x, v);
    if (rank(m.map) != m.map.rows()) return false;
    if (!is_injective(alg, kernel(x.mods[v], m.map).module)) return false;
  }
  return true;
}

/// Vertex modules projective and eta split epi at every vertex.
template <Field K>
bool is_prj_op(const BaseAlgebra<K>& alg, const Rep<K>& x) {
  for (std::size_t v = 0; v < x.mods.size(); ++v) {
    if (!is_projective(alg, x.mods[v])) return false;
    auto e = eta(x, v);
    if (!is_split_epi(x.mods[v], e.other, e.map)) return false;
  }
  return true;
}

/// Vertex modules injective and xi split mono at every vertex.
template <Field K>
bool is_inj_op(const BaseAlgebra<K>& alg, const Rep<K>& x) {
  for (std::size_t v = 0; v < x.mods.size(); ++v) {
    if (!is_injective(alg, x.mods[v])) return false;
    auto e = xi(x, v);
    if (!is_split_mono(e.other, x.mods[v], e.map)) return false;
  }
  return true;
}

template <Field K>
struct RepCover {
  Rep<K> proj;
  RepMorphism<K> rho;
};

/// P = sum_v e_lambda^v(P_v) with P_v the cover of X_v. The component of rho
/// on the summand (v, p) at vertex w is X(p) composed with the cover at v.
template <Field K>
RepCover<K> projective_epi_rep(const BaseAlgebra<K>& alg, const Rep<K>& x) {
  const auto& q = x.quiver;
  const K& k = alg.field;
  std::vector<Rep<K>> parts;
  std::vector<Cover<K>> covers;
  for (std::size_t v = 0; v < q->vertex_count(); ++v) {
    covers.push_back(projective_epi(alg, x.mods[v]));
    parts.push_back(e_lambda(q, q->vertices()[v], covers.back().proj));
  }
  auto sum = rep_direct_sum(k, q, parts);
  RepMorphism<K> rho;
  for (std::size_t w = 0; w < q->vertex_count(); ++w) {
    std::vector<Matrix<K>> cols;
    for (std::size_t v = 0; v < q->vertex_count(); ++v)
      for (const auto& p : q->paths_idx(v, w)) cols.push_back(path_map(x, p) * covers[v].rho);
    rho.push_back(hstack(k, x.dim(w), cols));
  }
  return {sum.sum, rho};
}

/// Vertexwise dual over the opposite quiver.
template <Field K>
Rep<K> dual_rep(const Rep<K>& x) {
  auto q = std::make_shared<const Quiver>(x.quiver->opposite());
  Rep<K> r{q, {}, {}};
  for (const auto& m : x.mods) r.mods.push_back(dual(m));
  for (const auto& f : x.maps) r.maps.push_back(f.transpose());
  return r;
}

template <Field K>
RepMorphism<K> dual_morphism(const RepMorphism<K>& f) {
  RepMorphism<K> g;
  for (const auto& m : f) g.push_back(m.transpose());
  return g;
}

template <Field K>
Matrix<K> kronecker(const Matrix<K>& a, const Matrix<K>& b) {
  const K& k = a.field();
  Matrix<K> r(k, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t s = 0; s < b.cols(); ++s) r(i * b.rows() + p, j * b.cols() + s) = k.mul(a(i, j), b(p, s));
  return r;
}

/// Componentwise tensor product; only over a field base (n = 1).
template <Field K>
Rep<K> tensor_cw(const BaseAlgebra<K>& alg, const Rep<K>& x, const Rep<K>& y) {
  if (alg.n != 1) throw InputError("componentwise tensor is only supported for n = 1");
  Rep<K> r{x.quiver, {}, {}};
  for (std::size_t v = 0; v < x.mods.size(); ++v)
    r.mods.push_back(AModule<K>(Matrix<K>(alg.field, x.dim(v) * y.dim(v), x.dim(v) * y.dim(v))));
  for (std::size_t a = 0; a < x.maps.size(); ++a) r.maps.push_back(kronecker(x.maps[a], y.maps[a]));
  return r;
}

/// k at every vertex, identity arrows.
template <Field K>
Rep<K> unit_rep(const BaseAlgebra<K>& alg, QuiverPtr q) {
  if (alg.n != 1) throw InputError("componentwise tensor unit is only supported for n = 1");
  Rep<K> r{q, std::vector<AModule<K>>(q->vertex_count(), simple_module(alg.field)), {}};
  for (std::size_t a = 0; a < q->arrow_count(); ++a) r.maps.push_back(Matrix<K>::identity(alg.field, 1));
  return r;
}

}  // namespace qrep
