#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qrep/representation.hpp"

namespace qrep {

/// Bounded cochain complex of representations, d^i : X^i -> X^{i+1}.
/// terms[i - lo] for lo <= i <= hi; diffs[i - lo] for lo <= i < hi.
/// Everything outside the window is zero. Complexes of modules are
/// complexes over the point quiver.
template <Field K>
struct Complex {
  K field;
  QuiverPtr quiver;
  int lo = 0, hi = 0;
  std::vector<Rep<K>> terms;
  std::vector<RepMorphism<K>> diffs;

  bool in_window(int i) const { return i >= lo && i <= hi; }

  Rep<K> term(int i) const { return in_window(i) ? terms[i - lo] : zero_rep(field, quiver); }

  /// d^i : X^i -> X^{i+1}, zero outside the window.
  RepMorphism<K> diff(int i) const {
    if (i >= lo && i < hi) return diffs[i - lo];
    return zero_morphism(term(i), term(i + 1));
  }

  std::size_t dim(int i, std::size_t v) const { return in_window(i) ? terms[i - lo].dim(v) : 0; }

  bool is_zero() const {
    for (const auto& t : terms)
      if (!t.is_zero()) return false;
    return true;
  }

  bool operator==(const Complex& o) const {
    return lo == o.lo && hi == o.hi && terms == o.terms && diffs == o.diffs;
  }
};

/// Per-degree components, indexed from the source window's lo.
template <Field K>
struct ChainMap {
  int lo = 0;
  std::vector<RepMorphism<K>> maps;

  bool operator==(const ChainMap&) const = default;
};

template <Field K>
RepMorphism<K> component(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& f, int i) {
  if (i >= f.lo && i < f.lo + static_cast<int>(f.maps.size())) return f.maps[i - f.lo];
  return zero_morphism(x.term(i), y.term(i));
}

template <Field K>
bool is_complex(const Complex<K>& x) {
  for (int i = x.lo; i <= x.hi; ++i) {
    if (!is_rep_morphism(x.term(i), x.term(i + 1), x.diff(i))) return false;
    if (!is_zero_morphism(compose(x.diff(i + 1), x.diff(i)))) return false;
  }
  return true;
}

template <Field K>
Complex<K> make_complex(const BaseAlgebra<K>& alg, QuiverPtr q, int lo, std::vector<Rep<K>> terms,
                        std::vector<RepMorphism<K>> diffs) {
  if (terms.empty()) throw ShapeError("complex: at least one term is required");
  if (diffs.size() + 1 != terms.size()) throw ShapeError("complex: need exactly one differential between consecutive terms");
  Complex<K> c{alg.field, q, lo, lo + static_cast<int>(terms.size()) - 1, std::move(terms), std::move(diffs)};
  for (int i = c.lo; i < c.hi; ++i) {
    const auto& d = c.diffs[i - c.lo];
    const auto& s = c.terms[i - c.lo];
    const auto& t = c.terms[i - c.lo + 1];
    if (d.size() != q->vertex_count()) throw ShapeError("complex: differential " + std::to_string(i) + " has wrong vertex count");
    for (std::size_t v = 0; v < d.size(); ++v)
      if (d[v].rows() != t.dim(v) || d[v].cols() != s.dim(v))
        throw ShapeError("complex: differential " + std::to_string(i) + " has shape " + d[v].shape() + " at vertex " +
                         std::to_string(q->vertices()[v]));
    if (!is_rep_morphism(s, t, d)) throw InputError("complex: differential " + std::to_string(i) + " is not a morphism");
  }
  for (int i = c.lo; i + 1 < c.hi; ++i)
    if (!is_zero_morphism(compose(c.diff(i + 1), c.diff(i))))
      throw InputError("complex: d^" + std::to_string(i + 1) + " d^" + std::to_string(i) + " is not zero");
  return c;
}

/// X placed in degree i.
template <Field K>
Complex<K> concentrated(const Rep<K>& x, int i) {
  return {x.mods[0].field(), x.quiver, i, i, {x}, {}};
}

/// M at degrees i-1 and i joined by the identity.
template <Field K>
Complex<K> disk(const Rep<K>& m, int i) {
  return {m.mods[0].field(), m.quiver, i - 1, i, {m, m}, {identity_morphism(m)}};
}

/// Same complex on a wider window (zero terms added).
template <Field K>
Complex<K> widen(const Complex<K>& x, int lo, int hi) {
  lo = std::min(lo, x.lo);
  hi = std::max(hi, x.hi);
  Complex<K> c{x.field, x.quiver, lo, hi, {}, {}};
  for (int i = lo; i <= hi; ++i) c.terms.push_back(x.term(i));
  for (int i = lo; i < hi; ++i) c.diffs.push_back(x.diff(i));
  return c;
}

/// Drop zero terms at both ends (keeps at least one term).
template <Field K>
Complex<K> trim(const Complex<K>& x) {
  int lo = x.lo, hi = x.hi;
  while (lo < hi && x.term(lo).is_zero()) ++lo;
  while (hi > lo && x.term(hi).is_zero()) --hi;
  Complex<K> c{x.field, x.quiver, lo, hi, {}, {}};
  for (int i = lo; i <= hi; ++i) c.terms.push_back(x.term(i));
  for (int i = lo; i < hi; ++i) c.diffs.push_back(x.diff(i));
  return c;
}

/// The complex of modules at vertex index v.
template <Field K>
Complex<K> vertex_complex(const Complex<K>& x, std::size_t v) {
  Complex<K> c{x.field, point_quiver(), x.lo, x.hi, {}, {}};
  for (const auto& t : x.terms) c.terms.push_back(point_rep(t.mods[v]));
  for (const auto& d : x.diffs) c.diffs.push_back({d[v]});
  return c;
}

/// X[n]: (X[n])^i = X^{i+n}, d = (-1)^n d.
template <Field K>
Complex<K> shift(const Complex<K>& x, int n) {
  Complex<K> c{x.field, x.quiver, x.lo - n, x.hi - n, x.terms, x.diffs};
  if (n % 2 != 0)
    for (auto& d : c.diffs) d = negate(d);
  return c;
}

template <Field K>
ChainMap<K> identity_chain_map(const Complex<K>& x) {
  ChainMap<K> f{x.lo, {}};
  for (const auto& t : x.terms) f.maps.push_back(identity_morphism(t));
  return f;
}

template <Field K>
ChainMap<K> zero_chain_map(const Complex<K>& x, const Complex<K>& y) {
  ChainMap<K> f{x.lo, {}};
  for (int i = x.lo; i <= x.hi; ++i) f.maps.push_back(zero_morphism(x.term(i), y.term(i)));
  return f;
}

template <Field K>
ChainMap<K> compose_chain(const Complex<K>& x, const Complex<K>& y, const Complex<K>& z, const ChainMap<K>& g,
                          const ChainMap<K>& f) {
  ChainMap<K> h{x.lo, {}};
  for (int i = x.lo; i <= x.hi; ++i) h.maps.push_back(compose(component(y, z, g, i), component(x, y, f, i)));
  return h;
}

template <Field K>
ChainMap<K> subtract_chain(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& f, const ChainMap<K>& g) {
  ChainMap<K> h{x.lo, {}};
  for (int i = x.lo; i <= x.hi; ++i) h.maps.push_back(subtract(component(x, y, f, i), component(x, y, g, i)));
  return h;
}

template <Field K>
bool is_chain_map(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& f) {
  int lo = std::min(x.lo, y.lo) - 1, hi = std::max(x.hi, y.hi) + 1;
  for (int i = lo; i <= hi; ++i) {
    auto fi = component(x, y, f, i);
    if (!is_rep_morphism(x.term(i), y.term(i), fi)) return false;
    auto lhs = compose(component(x, y, f, i + 1), x.diff(i));
    auto rhs = compose(y.diff(i), fi);
    if (lhs != rhs) return false;
  }
  return true;
}

/// dim H^i at each vertex index.
template <Field K>
std::vector<std::size_t> homology_dims(const Complex<K>& x, int i) {
  std::vector<std::size_t> out;
  auto din = x.diff(i - 1), dout = x.diff(i);
  for (std::size_t v = 0; v < x.quiver->vertex_count(); ++v)
    out.push_back(x.dim(i, v) - rank(dout[v]) - rank(din[v]));
  return out;
}

template <Field K>
bool is_exact_at(const Complex<K>& x, int i) {
  for (auto d : homology_dims(x, i))
    if (d != 0) return false;
  return true;
}

template <Field K>
bool is_exact(const Complex<K>& x) {
  for (int i = x.lo; i <= x.hi; ++i)
    if (!is_exact_at(x, i)) return false;
  return true;
}

/// Z^i = ker d^i with its inclusion.
template <Field K>
RepSub<K> cycles(const Complex<K>& x, int i) {
  return rep_kernel(x.term(i), x.diff(i));
}

/// H^i as a representation, with the projection Z^i -> H^i.
template <Field K>
RepSub<K> homology(const Complex<K>& x, int i) {
  auto z = cycles(x, i);
  auto b = x.diff(i - 1);
  RepMorphism<K> into_z;
  for (std::size_t v = 0; v < b.size(); ++v) into_z.push_back(solve(z.map[v], b[v])->particular);
  return rep_cokernel(z.rep, into_z);
}

template <Field K>
struct ComplexSum {
  Complex<K> sum;
  std::vector<ChainMap<K>> inj;
  std::vector<ChainMap<K>> proj;
};

template <Field K>
ComplexSum<K> complex_direct_sum(const std::vector<Complex<K>>& parts) {
  const auto& f = parts.at(0);
  int lo = f.lo, hi = f.hi;
  for (const auto& p : parts) {
    lo = std::min(lo, p.lo);
    hi = std::max(hi, p.hi);
  }
  ComplexSum<K> out{Complex<K>{f.field, f.quiver, lo, hi, {}, {}}, std::vector<ChainMap<K>>(parts.size()),
                    std::vector<ChainMap<K>>(parts.size())};
  for (std::size_t j = 0; j < parts.size(); ++j) out.inj[j].lo = parts[j].lo;
  for (int i = lo; i <= hi; ++i) {
    std::vector<Rep<K>> ts;
    for (const auto& p : parts) ts.push_back(p.term(i));
    auto s = rep_direct_sum(f.field, f.quiver, ts);
    out.sum.terms.push_back(s.sum);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j].in_window(i)) out.inj[j].maps.push_back(s.inj[j]);
      out.proj[j].maps.push_back(s.proj[j]);
    }
  }
  for (std::size_t j = 0; j < parts.size(); ++j) out.proj[j].lo = lo;
  for (int i = lo; i < hi; ++i) {
    RepMorphism<K> d;
    for (std::size_t v = 0; v < f.quiver->vertex_count(); ++v) {
      std::vector<Matrix<K>> bl;
      for (const auto& p : parts) bl.push_back(p.diff(i)[v]);
      d.push_back(block_diag(f.field, bl));
    }
    out.sum.diffs.push_back(d);
  }
  return out;
}

/// cone(f)^i = X^{i+1} + Y^i with d = [[-d_X, 0], [f, d_Y]].
template <Field K>
Complex<K> cone(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& f) {
  int lo = std::min(x.lo - 1, y.lo), hi = std::max(x.hi - 1, y.hi);
  Complex<K> c{x.field, x.quiver, lo, hi, {}, {}};
  for (int i = lo; i <= hi; ++i) c.terms.push_back(rep_sum(x.term(i + 1), y.term(i)));
  for (int i = lo; i < hi; ++i) {
    RepMorphism<K> d;
    auto dx = x.diff(i + 1), dy = y.diff(i), fi = component(x, y, f, i + 1);
    for (std::size_t v = 0; v < x.quiver->vertex_count(); ++v) {
      std::size_t a0 = x.dim(i + 1, v), b0 = y.dim(i, v), a1 = x.dim(i + 2, v), b1 = y.dim(i + 1, v);
      Matrix<K> m(x.field, a1 + b1, a0 + b0);
      m.set_block(0, 0, -dx[v]);
      m.set_block(a1, 0, fi[v]);
      m.set_block(a1, a0, dy[v]);
      d.push_back(std::move(m));
    }
    c.diffs.push_back(std::move(d));
  }
  return c;
}

template <Field K>
bool is_quasi_iso(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& f) {
  return is_exact(cone(x, y, f));
}

/// Flattening of graded morphisms X -> Y of a fixed degree n into a single
/// coordinate vector: degree j ascending, vertex ascending, entries row-major.
template <Field K>
class GradedHomLayout {
 public:
  GradedHomLayout(const Complex<K>& x, const Complex<K>& y, int n) : x_(x), y_(y), n_(n) {
    for (int j = x.lo; j <= x.hi; ++j) {
      if (!y.in_window(j + n)) continue;
      degrees_.push_back(j);
      offsets_.push_back(size_);
      for (std::size_t v = 0; v < x.quiver->vertex_count(); ++v) size_ += x.dim(j, v) * y.dim(j + n, v);
    }
  }
  std::size_t size() const { return size_; }
  const std::vector<int>& degrees() const { return degrees_; }

  /// Component X^j -> Y^{j+n} read from column col of vec.
  RepMorphism<K> read(const Matrix<K>& vec, int j, std::size_t col = 0) const {
    RepMorphism<K> f;
    auto it = std::find(degrees_.begin(), degrees_.end(), j);
    for (std::size_t v = 0; v < x_.quiver->vertex_count(); ++v) f.emplace_back(x_.field, y_.dim(j + n_, v), x_.dim(j, v));
    if (it == degrees_.end()) return f;
    std::size_t off = offsets_[it - degrees_.begin()];
    for (auto& m : f)
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = vec(off++, col);
    return f;
  }
  void write(Matrix<K>& vec, int j, const RepMorphism<K>& f, std::size_t col = 0) const {
    auto it = std::find(degrees_.begin(), degrees_.end(), j);
    if (it == degrees_.end()) return;
    std::size_t off = offsets_[it - degrees_.begin()];
    for (const auto& m : f)
      for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) vec(off++, col) = m(r, c);
  }

 private:
  const Complex<K>& x_;
  const Complex<K>& y_;
  int n_;
  std::vector<int> degrees_;
  std::vector<std::size_t> offsets_;
  std::size_t size_ = 0;
};

/// Hom(X, Y) as a complex of vector spaces: degree n is the sum over j of
/// Hom(X^j, Y^{j+n}) with D(phi) = d_Y phi - (-1)^n phi d_X.
template <Field K>
struct HomComplex {
  int lo = 0, hi = 0;
  std::vector<Matrix<K>> basis;  // basis[n-lo]: flattened basis vectors as columns
  std::vector<Matrix<K>> diff;   // diff[n-lo]: coordinates of D^n, for lo <= n < hi
  std::vector<std::size_t> ranks;

  std::size_t dim(int n) const { return (n < lo || n > hi) ? 0 : basis[n - lo].cols(); }
  std::size_t rank_of(int n) const { return (n < lo || n >= hi) ? 0 : ranks[n - lo]; }
  std::size_t cohomology_dim(int n) const { return dim(n) - rank_of(n) - rank_of(n - 1); }
};

template <Field K>
Matrix<K> graded_hom_basis(const Complex<K>& x, const Complex<K>& y, int n) {
  GradedHomLayout<K> lay(x, y, n);
  std::vector<Matrix<K>> cols;
  for (int j : lay.degrees()) {
    for (const auto& f : hom_rep_basis(x.term(j), y.term(j + n))) {
      Matrix<K> v(x.field, lay.size(), 1);
      lay.write(v, j, f);
      cols.push_back(v);
    }
  }
  return hstack(x.field, lay.size(), cols);
}

/// Apply D^n to the columns of vec (flattened degree-n elements).
template <Field K>
Matrix<K> apply_hom_differential(const Complex<K>& x, const Complex<K>& y, int n, const Matrix<K>& vec) {
  GradedHomLayout<K> src(x, y, n), dst(x, y, n + 1);
  Matrix<K> out(x.field, dst.size(), vec.cols());
  for (std::size_t c = 0; c < vec.cols(); ++c)
    for (int j : dst.degrees()) {
      // component X^j -> Y^{j+n+1}
      auto a = compose(y.diff(j + n), src.read(vec, j, c));
      auto b = compose(src.read(vec, j + 1, c), x.diff(j));
      dst.write(out, j, (n % 2 == 0) ? subtract(a, b) : add(a, b), c);
    }
  return out;
}

template <Field K>
HomComplex<K> hom_complex(const Complex<K>& x, const Complex<K>& y) {
  HomComplex<K> h;
  h.lo = y.lo - x.hi;
  h.hi = y.hi - x.lo;
  for (int n = h.lo; n <= h.hi; ++n) h.basis.push_back(graded_hom_basis(x, y, n));
  for (int n = h.lo; n < h.hi; ++n) {
    auto img = apply_hom_differential(x, y, n, h.basis[n - h.lo]);
    h.ranks.push_back(rank(img));
    auto coords = solve(h.basis[n + 1 - h.lo], img);
    if (!coords) throw MathError("hom complex differential leaves the hom space");
    h.diff.push_back(coords->particular);
  }
  return h;
}

/// dim H^n Hom(X, Y) without building the whole complex.
template <Field K>
std::size_t hom_cohomology_dim(const Complex<K>& x, const Complex<K>& y, int n) {
  auto b = graded_hom_basis(x, y, n);
  std::size_t r_out = rank(apply_hom_differential(x, y, n, b));
  std::size_t r_in = rank(apply_hom_differential(x, y, n - 1, graded_hom_basis(x, y, n - 1)));
  return b.cols() - r_out - r_in;
}

/// Chain homotopy s (s^n : X^n -> Y^{n-1}) with
/// f^n - g^n = d_Y^{n-1} s^n + s^{n+1} d_X^n, or nullopt.
template <Field K>
std::optional<ChainMap<K>> homotopic(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& f,
                                      const ChainMap<K>& g) {
  LinearSystem<K> sys(x.field);
  std::vector<std::vector<std::size_t>> ids;
  for (int n = x.lo; n <= x.hi; ++n) ids.push_back(add_rep_morphism_unknown(sys, x.term(n), y.term(n - 1)));
  std::size_t nv = x.quiver->vertex_count();
  for (int n = x.lo; n <= x.hi; ++n) {
    auto diff = subtract(component(x, y, f, n), component(x, y, g, n));
    auto dy = y.diff(n - 1), dx = x.diff(n);
    for (std::size_t v = 0; v < nv; ++v) {
      std::vector<typename LinearSystem<K>::Term> terms{{ids[n - x.lo][v], dy[v], std::nullopt, false}};
      if (n + 1 <= x.hi) terms.push_back({ids[n + 1 - x.lo][v], std::nullopt, dx[v], false});
      sys.add_equation(y.dim(n, v), x.dim(n, v), terms, diff[v]);
    }
  }
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  ChainMap<K> s{x.lo, {}};
  for (int n = x.lo; n <= x.hi; ++n) {
    RepMorphism<K> m;
    for (std::size_t v = 0; v < nv; ++v) m.push_back(sol->particular[ids[n - x.lo][v]]);
    s.maps.push_back(m);
  }
  return s;
}

/// Check the homotopy identity for a proposed s.
template <Field K>
bool verify_homotopy(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& f, const ChainMap<K>& g,
                     const ChainMap<K>& s) {
  for (int n = x.lo; n <= x.hi; ++n) {
    auto sn = n >= s.lo && n < s.lo + static_cast<int>(s.maps.size()) ? s.maps[n - s.lo]
                                                                     : zero_morphism(x.term(n), y.term(n - 1));
    auto sn1 = n + 1 >= s.lo && n + 1 < s.lo + static_cast<int>(s.maps.size())
                   ? s.maps[n + 1 - s.lo]
                   : zero_morphism(x.term(n + 1), y.term(n));
    if (!is_rep_morphism(x.term(n), y.term(n - 1), sn)) return false;
    auto lhs = subtract(component(x, y, f, n), component(x, y, g, n));
    auto rhs = add(compose(y.diff(n - 1), sn), compose(sn1, x.diff(n)));
    if (lhs != rhs) return false;
  }
  return true;
}

template <Field K>
bool in_C_of(const Complex<K>& x, const std::function<bool(const Rep<K>&)>& pred) {
  for (const auto& t : x.terms)
    if (!pred(t)) return false;
  return true;
}

template <Field K>
bool in_ex(const Complex<K>& x, const std::function<bool(const Rep<K>&)>& pred) {
  return in_C_of(x, pred) && is_exact(x);
}

/// Exact with every cycle object in the class.
template <Field K>
bool in_tilde(const Complex<K>& x, const std::function<bool(const Rep<K>&)>& pred) {
  if (!is_exact(x)) return false;
  for (int i = x.lo; i <= x.hi; ++i)
    if (!pred(cycles(x, i).rep)) return false;
  return true;
}

template <Field K>
bool is_termwise_projective(const BaseAlgebra<K>& alg, const Complex<K>& x) {
  return in_C_of<K>(x, [&](const Rep<K>& r) { return is_projective_rep(alg, r); });
}

/// Exact with projective cycles, i.e. a sum of disks on projectives.
template <Field K>
bool is_projective_complex(const BaseAlgebra<K>& alg, const Complex<K>& x) {
  return in_tilde<K>(x, [&](const Rep<K>& r) { return is_projective_rep(alg, r); });
}

/// For bounded complexes, DG-projective is the same as termwise projective.
template <Field K>
bool is_dg_projective_bounded(const BaseAlgebra<K>& alg, const Complex<K>& x) {
  return is_termwise_projective(alg, x);
}

}  // namespace qrep
