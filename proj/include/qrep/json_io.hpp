#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qrep/model.hpp"

namespace qrep {

using Json = nlohmann::json;

/// Canonical text: sorted keys, two-space indent, trailing newline.
inline std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

inline Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(source + ": malformed JSON: " + e.what());
  }
}

namespace detail {

inline const Json& child(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw InputError(path + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path + ": missing key \"" + key + "\"");
  return *it;
}

inline int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer");
  return j.get<int>();
}

}  // namespace detail

inline Json element_to_json(const PrimeField&, PrimeField::value_type a) { return a; }

inline Json element_to_json(const RationalField&, const RationalField::value_type& a) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(a) == 1) {
    auto num = numerator(a);
    if (num >= INT64_MIN && num <= INT64_MAX) return static_cast<std::int64_t>(num);
    return num.str();
  }
  return a.str();
}

inline PrimeField::value_type element_from_json(const PrimeField& k, const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw InputError(path + ": expected an integer entry");
  return k.from_int(j.get<std::int64_t>());
}

inline RationalField::value_type element_from_json(const RationalField&, const Json& j, const std::string& path) {
  if (j.is_number_integer()) return RationalField::value_type(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return RationalField::value_type(j.get<std::string>());
    } catch (const std::exception&) {
      throw InputError(path + ": cannot read \"" + j.get<std::string>() + "\" as a rational");
    }
  }
  throw InputError(path + ": expected an integer or \"a/b\" entry");
}

template <Field K>
Json matrix_to_json(const Matrix<K>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(element_to_json(m.field(), m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <Field K>
Matrix<K> matrix_from_json(const K& k, const Json& j, std::size_t rows, std::size_t cols, const std::string& path) {
  if (!j.is_array()) throw InputError(path + ": expected a matrix (list of rows)");
  if (j.size() != rows)
    throw ShapeError(path + ": expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  Matrix<K> m(k, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& row = j[i];
    auto rp = path + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw InputError(rp + ": expected a row");
    if (row.size() != cols)
      throw ShapeError(rp + ": expected " + std::to_string(cols) + " entries, got " + std::to_string(row.size()));
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = element_from_json(k, row[c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

template <Field K>
Json module_to_json(const AModule<K>& m) {
  return {{"dim", m.dim()}, {"op", matrix_to_json(m.op)}};
}

template <Field K>
AModule<K> module_from_json(const BaseAlgebra<K>& alg, const Json& j, const std::string& path) {
  int d = detail::as_int(detail::child(j, "dim", path), path + ".dim");
  if (d < 0) throw InputError(path + ".dim: must be non-negative");
  auto op = matrix_from_json(alg.field, detail::child(j, "op", path), d, d, path + ".op");
  try {
    return make_module(alg, op);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

inline Json quiver_to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& a : q.arrows()) arrows.push_back({{"id", a.id}, {"s", a.s}, {"t", a.t}});
  return {{"vertices", q.vertices()}, {"arrows", arrows}};
}

inline QuiverPtr quiver_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return named_quiver(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(path + ": " + e.what());
    }
  }
  const auto& vs = detail::child(j, "vertices", path);
  if (!vs.is_array()) throw InputError(path + ".vertices: expected a list");
  std::vector<int> vertices;
  for (std::size_t i = 0; i < vs.size(); ++i) vertices.push_back(detail::as_int(vs[i], path + ".vertices[" + std::to_string(i) + "]"));
  std::vector<Arrow> arrows;
  if (j.contains("arrows")) {
    const auto& as = j["arrows"];
    if (!as.is_array()) throw InputError(path + ".arrows: expected a list");
    for (std::size_t i = 0; i < as.size(); ++i) {
      auto ap = path + ".arrows[" + std::to_string(i) + "]";
      const auto& id = detail::child(as[i], "id", ap);
      if (!id.is_string()) throw InputError(ap + ".id: expected a string");
      arrows.push_back({id.get<std::string>(), detail::as_int(detail::child(as[i], "s", ap), ap + ".s"),
                        detail::as_int(detail::child(as[i], "t", ap), ap + ".t")});
    }
  }
  try {
    return std::make_shared<const Quiver>(std::move(vertices), std::move(arrows));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <Field K>
Json morphism_to_json(const Quiver& q, const RepMorphism<K>& f) {
  Json out = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) out[std::to_string(q.vertices()[v])] = matrix_to_json(f[v]);
  return out;
}

template <Field K>
RepMorphism<K> morphism_from_json(const K& k, const Rep<K>& src, const Rep<K>& dst, const Json& j,
                                  const std::string& path) {
  const auto& q = *src.quiver;
  if (!j.is_object()) throw InputError(path + ": expected an object keyed by vertex");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (int v : q.vertices()) known = known || std::to_string(v) == key;
    if (!known) throw ShapeError(path + "." + key + ": unknown vertex");
  }
  RepMorphism<K> f;
  for (std::size_t v = 0; v < q.vertex_count(); ++v) {
    auto key = std::to_string(q.vertices()[v]);
    if (j.contains(key)) f.push_back(matrix_from_json(k, j[key], dst.dim(v), src.dim(v), path + "." + key));
    else if (dst.dim(v) == 0 || src.dim(v) == 0) f.push_back(Matrix<K>(k, dst.dim(v), src.dim(v)));
    else throw InputError(path + ": missing vertex " + key);
  }
  if (!is_rep_morphism(src, dst, f)) throw InputError(path + ": not a morphism of representations");
  return f;
}

template <Field K>
Json rep_to_json(const Rep<K>& r) {
  const auto& q = *r.quiver;
  Json mods = Json::object(), arrows = Json::object();
  for (std::size_t v = 0; v < q.vertex_count(); ++v) mods[std::to_string(q.vertices()[v])] = module_to_json(r.mods[v]);
  for (std::size_t a = 0; a < q.arrow_count(); ++a) arrows[q.arrows()[a].id] = matrix_to_json(r.maps[a]);
  return {{"quiver", quiver_to_json(q)}, {"modules", mods}, {"arrows", arrows}};
}

template <Field K>
Rep<K> rep_from_json(const BaseAlgebra<K>& alg, const Json& j, const std::string& path) {
  auto q = quiver_from_json(detail::child(j, "quiver", path), path + ".quiver");
  const auto& mj = detail::child(j, "modules", path);
  if (!mj.is_object()) throw InputError(path + ".modules: expected an object keyed by vertex");
  std::vector<AModule<K>> mods;
  for (int v : q->vertices()) {
    auto key = std::to_string(v);
    if (mj.contains(key)) mods.push_back(module_from_json(alg, mj[key], path + ".modules." + key));
    else mods.push_back(zero_module(alg.field));
  }
  for (const auto& [key, value] : mj.items()) {
    bool known = false;
    for (int v : q->vertices()) known = known || std::to_string(v) == key;
    if (!known) throw ShapeError(path + ".modules." + key + ": unknown vertex");
  }
  Json empty = Json::object();
  const auto& aj = j.contains("arrows") ? j["arrows"] : empty;
  if (!aj.is_object()) throw InputError(path + ".arrows: expected an object keyed by arrow id");
  for (const auto& [key, value] : aj.items())
    if (!q->has_arrow(key)) throw ShapeError(path + ".arrows." + key + ": unknown arrow");
  std::vector<Matrix<K>> maps;
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    const auto& id = q->arrows()[a].id;
    std::size_t rows = mods[q->target(a)].dim(), cols = mods[q->source(a)].dim();
    if (aj.contains(id)) maps.push_back(matrix_from_json(alg.field, aj[id], rows, cols, path + ".arrows." + id));
    else if (rows == 0 || cols == 0) maps.push_back(Matrix<K>(alg.field, rows, cols));
    else throw InputError(path + ".arrows: missing arrow '" + id + "'");
  }
  try {
    return make_rep(alg, q, std::move(mods), std::move(maps));
  } catch (const ShapeError& e) {
    throw ShapeError(path + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <Field K>
Json complex_to_json(const Complex<K>& c) {
  Json terms = Json::array(), diffs = Json::array();
  for (const auto& t : c.terms) terms.push_back(rep_to_json(t));
  for (const auto& d : c.diffs) diffs.push_back(morphism_to_json(*c.quiver, d));
  return {{"lo", c.lo}, {"hi", c.hi}, {"terms", terms}, {"diffs", diffs}};
}

/// A complex, or a single representation (read as concentrated in degree 0).
template <Field K>
Complex<K> complex_from_json(const BaseAlgebra<K>& alg, const Json& j, const std::string& path) {
  if (j.is_object() && j.contains("quiver")) return concentrated(rep_from_json(alg, j, path), 0);
  int lo = detail::as_int(detail::child(j, "lo", path), path + ".lo");
  int hi = detail::as_int(detail::child(j, "hi", path), path + ".hi");
  const auto& tj = detail::child(j, "terms", path);
  if (!tj.is_array()) throw InputError(path + ".terms: expected a list");
  if (hi < lo || tj.size() != static_cast<std::size_t>(hi - lo + 1))
    throw ShapeError(path + ".terms: expected " + std::to_string(std::max(0, hi - lo + 1)) + " terms for degrees " +
                     std::to_string(lo) + ".." + std::to_string(hi));
  std::vector<Rep<K>> terms;
  for (std::size_t i = 0; i < tj.size(); ++i) {
    terms.push_back(rep_from_json(alg, tj[i], path + ".terms[" + std::to_string(i) + "]"));
    if (!(*terms.back().quiver == *terms.front().quiver))
      throw ShapeError(path + ".terms[" + std::to_string(i) + "]: quiver differs from the first term");
    terms.back().quiver = terms.front().quiver;
  }
  Json empty = Json::array();
  const auto& dj = j.contains("diffs") ? j["diffs"] : empty;
  if (!dj.is_array()) throw InputError(path + ".diffs: expected a list");
  if (dj.size() + 1 != terms.size())
    throw ShapeError(path + ".diffs: expected " + std::to_string(terms.size() - 1) + " differentials");
  std::vector<RepMorphism<K>> diffs;
  for (std::size_t i = 0; i < dj.size(); ++i)
    diffs.push_back(morphism_from_json(alg.field, terms[i], terms[i + 1], dj[i], path + ".diffs[" + std::to_string(i) + "]"));
  auto q = terms.front().quiver;
  try {
    return make_complex(alg, q, lo, std::move(terms), std::move(diffs));
  } catch (const ShapeError& e) {
    throw ShapeError(path + ": " + e.what());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

template <Field K>
Json chain_map_to_json(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& f) {
  Json maps = Json::array();
  for (int i = x.lo; i <= x.hi; ++i) maps.push_back(morphism_to_json(*x.quiver, component(x, y, f, i)));
  return {{"lo", x.lo}, {"maps", maps}};
}

template <Field K>
ChainMap<K> chain_map_from_json(const K& k, const Complex<K>& x, const Complex<K>& y, const Json& j,
                                const std::string& path) {
  int lo = detail::as_int(detail::child(j, "lo", path), path + ".lo");
  const auto& mj = detail::child(j, "maps", path);
  if (!mj.is_array()) throw InputError(path + ".maps: expected a list");
  ChainMap<K> f{lo, {}};
  for (std::size_t i = 0; i < mj.size(); ++i) {
    int deg = lo + static_cast<int>(i);
    f.maps.push_back(morphism_from_json(k, x.term(deg), y.term(deg), mj[i], path + ".maps[" + std::to_string(i) + "]"));
  }
  if (!is_chain_map(x, y, f)) throw InputError(path + ": not a chain map");
  return f;
}

template <Field K>
Json certificate_to_json(const Complex<K>& x, const Certificate<K>& c, bool cofibrant) {
  Json flags = Json::object();
  for (const auto& [name, value] : c.flags) flags[name] = value;
  Json out = {{"object", complex_to_json(c.object)},
              {"flags", flags},
              {"ok", c.ok()},
              {"window", {c.window_lo, c.window_hi}},
              {"cut", c.cut ? Json(*c.cut) : Json(nullptr)}};
  if (cofibrant) out["rho"] = chain_map_to_json(c.object, x, c.map);
  else out["iota"] = chain_map_to_json(x, c.object, c.map);
  return out;
}

}  // namespace qrep
