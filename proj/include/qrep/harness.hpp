#pragma once

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qrep/extensions.hpp"
#include "qrep/json_io.hpp"
#include "qrep/model.hpp"
#include "qrep/morphism_category.hpp"

namespace qrep::harness {

using K = PrimeField;

struct Params {
  std::uint32_t p = 2;
  int n = 1;
  std::string quiver = "A2";
  int max_dim = 2;
  int window = 2;
  int length = 4;
  int max_i = 2;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  int samples = 50;
  std::size_t limit = 200000;  // refuse exhaustive families larger than this
  bool timing = false;

  BaseAlgebra<K> algebra() const { return BaseAlgebra<K>(K(p), n); }
  QuiverPtr q() const { return named_quiver(quiver); }
};

inline Json params_to_json(const Params& p) {
  return {{"base", "gf:" + std::to_string(p.p)},
          {"nil", p.n},
          {"quiver", p.quiver},
          {"max_dim", p.max_dim},
          {"window", p.window},
          {"length", p.length},
          {"max_i", p.max_i},
          {"seed", p.seed},
          {"exhaustive", p.exhaustive},
          {"samples", p.samples}};
}

/// Inverse of params_to_json; keys that are absent keep their defaults.
inline Params params_from_json(const Json& j, const std::string& path) {
  Params p;
  if (!j.is_object()) throw InputError(path + ": expected an object");
  if (j.contains("base")) {
    const auto& b = j["base"];
    if (!b.is_string() || b.get<std::string>().rfind("gf:", 0) != 0)
      throw InputError(path + ".base: the harness runs over gf:p only");
    p.p = static_cast<std::uint32_t>(std::stoul(b.get<std::string>().substr(3)));
  }
  auto num = [&](const char* key, auto& field) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer()) throw InputError(path + "." + key + ": expected an integer");
    field = j[key].template get<std::remove_reference_t<decltype(field)>>();
  };
  num("nil", p.n);
  num("max_dim", p.max_dim);
  num("window", p.window);
  num("length", p.length);
  num("max_i", p.max_i);
  num("seed", p.seed);
  num("samples", p.samples);
  if (j.contains("quiver")) {
    if (!j["quiver"].is_string()) throw InputError(path + ".quiver: expected a quiver name");
    p.quiver = j["quiver"].get<std::string>();
  }
  if (j.contains("exhaustive")) {
    if (!j["exhaustive"].is_boolean()) throw InputError(path + ".exhaustive: expected a boolean");
    p.exhaustive = j["exhaustive"].get<bool>();
  }
  return p;
}

/// Seeded generator; only raw 64-bit draws are used so streams are
/// reproducible across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t below(std::uint64_t m) { return eng_() % m; }

 private:
  std::mt19937_64 eng_;
};

// ---------------------------------------------------------------- generators

/// Every A-module of dimension at most max_dim, as operators on k^d.
inline std::vector<AModule<K>> all_modules(const BaseAlgebra<K>& alg, int max_dim, std::size_t limit) {
  const K& k = alg.field;
  std::vector<AModule<K>> out{zero_module(k)};
  for (int d = 1; d <= max_dim; ++d) {
    std::size_t cells = static_cast<std::size_t>(d) * d;
    std::vector<std::uint32_t> digits(cells, 0);
    while (true) {
      Matrix<K> op(k, d, d);
      for (std::size_t i = 0; i < cells; ++i) op(i / d, i % d) = digits[i];
      if (power(op, alg.n).is_zero()) {
        out.emplace_back(op);
        if (out.size() > limit) throw InputError("module family exceeds the exhaustive limit");
      }
      std::size_t i = 0;
      while (i < cells && ++digits[i] == k.characteristic()) digits[i++] = 0;
      if (i == cells) break;
    }
  }
  return out;
}

/// All linear combinations of a basis (p^m of them), zero first.
inline std::vector<RepMorphism<K>> all_combinations(const K& k, const std::vector<RepMorphism<K>>& basis,
                                                    const RepMorphism<K>& zero, std::size_t limit) {
  std::vector<RepMorphism<K>> out;
  std::vector<std::uint32_t> digits(basis.size(), 0);
  while (true) {
    RepMorphism<K> f = zero;
    for (std::size_t b = 0; b < basis.size(); ++b)
      for (std::uint32_t c = 0; c < digits[b]; ++c) f = add(f, basis[b]);
    out.push_back(std::move(f));
    if (out.size() > limit) throw InputError("morphism family exceeds the exhaustive limit");
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == k.characteristic()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

inline RepMorphism<K> random_combination(const K& k, const std::vector<RepMorphism<K>>& basis,
                                         const RepMorphism<K>& zero, Rng& rng) {
  RepMorphism<K> f = zero;
  for (const auto& b : basis) {
    auto c = rng.below(k.characteristic());
    for (std::uint64_t t = 0; t < c; ++t) f = add(f, b);
  }
  return f;
}

/// Every representation whose vertex modules come from `mods`.
inline std::vector<Rep<K>> all_reps(const BaseAlgebra<K>& alg, QuiverPtr q, const std::vector<AModule<K>>& mods,
                                    std::size_t limit) {
  const K& k = alg.field;
  std::size_t nv = q->vertex_count(), na = q->arrow_count();
  std::vector<Rep<K>> out;
  std::vector<std::size_t> choice(nv, 0);
  while (true) {
    Rep<K> base{q, {}, {}};
    for (std::size_t v = 0; v < nv; ++v) base.mods.push_back(mods[choice[v]]);
    for (std::size_t a = 0; a < na; ++a)
      base.maps.emplace_back(k, base.dim(q->target(a)), base.dim(q->source(a)));
    // arrow maps: all A-linear maps, arrow by arrow
    std::vector<std::vector<Matrix<K>>> options;
    for (std::size_t a = 0; a < na; ++a) {
      auto s = base.mods[q->source(a)], t = base.mods[q->target(a)];
      std::vector<RepMorphism<K>> basis;
      for (const auto& m : hom_basis(s, t)) basis.push_back({m});
      auto combos = all_combinations(k, basis, {Matrix<K>(k, t.dim(), s.dim())}, limit);
      options.emplace_back();
      for (auto& c : combos) options.back().push_back(c[0]);
    }
    std::vector<std::size_t> pick(na, 0);
    while (true) {
      Rep<K> r = base;
      for (std::size_t a = 0; a < na; ++a) r.maps[a] = options[a][pick[a]];
      out.push_back(std::move(r));
      if (out.size() > limit) throw InputError("representation family exceeds the exhaustive limit");
      std::size_t a = 0;
      while (a < na && ++pick[a] == options[a].size()) pick[a++] = 0;
      if (a == na) break;
    }
    std::size_t v = 0;
    while (v < nv && ++choice[v] == mods.size()) choice[v++] = 0;
    if (v == nv) break;
  }
  return out;
}

inline Rep<K> random_rep(const BaseAlgebra<K>& alg, QuiverPtr q, const std::vector<AModule<K>>& mods, Rng& rng) {
  const K& k = alg.field;
  Rep<K> r{q, {}, {}};
  for (std::size_t v = 0; v < q->vertex_count(); ++v) r.mods.push_back(mods[rng.below(mods.size())]);
  for (std::size_t a = 0; a < q->arrow_count(); ++a) {
    auto s = r.mods[q->source(a)], t = r.mods[q->target(a)];
    std::vector<RepMorphism<K>> basis;
    for (const auto& m : hom_basis(s, t)) basis.push_back({m});
    r.maps.push_back(random_combination(k, basis, {Matrix<K>(k, t.dim(), s.dim())}, rng)[0]);
  }
  return r;
}

/// Basis of the rep morphisms d : x -> y with d prev = 0.
inline std::vector<RepMorphism<K>> differential_basis(const K& k, const Rep<K>& w, const Rep<K>& x, const Rep<K>& y,
                                                      const RepMorphism<K>& prev) {
  LinearSystem<K> sys(k);
  auto ids = add_rep_morphism_unknown(sys, x, y);
  for (std::size_t v = 0; v < ids.size(); ++v)
    sys.add_equation(y.dim(v), w.dim(v), {{ids[v], std::nullopt, prev[v], false}});
  return sys.solve()->kernel;
}

/// Every complex in degrees 0..len-1 (len <= window) with terms from
/// `pool` and nonzero end terms (len >= 2), plus the zero complex.
inline std::vector<Complex<K>> all_complexes(const BaseAlgebra<K>& alg, QuiverPtr q, const std::vector<Rep<K>>& pool,
                                             int window, std::size_t limit) {
  const K& k = alg.field;
  std::vector<Complex<K>> out;
  for (int len = 1; len <= window; ++len) {
    std::function<void(std::vector<Rep<K>>&, std::vector<RepMorphism<K>>&)> grow =
        [&](std::vector<Rep<K>>& terms, std::vector<RepMorphism<K>>& diffs) {
          if (static_cast<int>(terms.size()) == len) {
            if (len >= 2 && terms.back().is_zero()) return;
            out.push_back(Complex<K>{k, q, 0, len - 1, terms, diffs});
            if (out.size() > limit) throw InputError("complex family exceeds the exhaustive limit");
            return;
          }
          for (const auto& t : pool) {
            if (terms.empty() && len >= 2 && t.is_zero()) continue;
            if (terms.empty()) {
              terms.push_back(t);
              grow(terms, diffs);
              terms.pop_back();
              continue;
            }
            const auto& x = terms.back();
            Rep<K> w = terms.size() >= 2 ? terms[terms.size() - 2] : zero_rep(k, q);
            RepMorphism<K> prev = diffs.empty() ? zero_morphism(w, x) : diffs.back();
            auto basis = differential_basis(k, w, x, t, prev);
            for (auto& d : all_combinations(k, basis, zero_morphism(x, t), limit)) {
              terms.push_back(t);
              diffs.push_back(std::move(d));
              grow(terms, diffs);
              terms.pop_back();
              diffs.pop_back();
            }
          }
        };
    std::vector<Rep<K>> terms;
    std::vector<RepMorphism<K>> diffs;
    grow(terms, diffs);
  }
  return out;
}

inline Complex<K> random_complex(const BaseAlgebra<K>& alg, QuiverPtr q, const std::vector<Rep<K>>& pool, int window,
                                 Rng& rng) {
  const K& k = alg.field;
  int len = 1 + static_cast<int>(rng.below(window));
  Complex<K> c{k, q, 0, len - 1, {}, {}};
  for (int j = 0; j < len; ++j) {
    auto t = pool[rng.below(pool.size())];
    if (j > 0) {
      const auto& x = c.terms.back();
      Rep<K> w = j >= 2 ? c.terms[j - 2] : zero_rep(k, q);
      RepMorphism<K> prev = c.diffs.empty() ? zero_morphism(w, x) : c.diffs.back();
      c.diffs.push_back(random_combination(k, differential_basis(k, w, x, t, prev), zero_morphism(x, t), rng));
    }
    c.terms.push_back(std::move(t));
  }
  return c;
}

/// Basis of the chain maps X -> Y (degree-0 cocycles of the hom complex).
inline std::vector<ChainMap<K>> chain_map_basis(const Complex<K>& x, const Complex<K>& y) {
  auto b = graded_hom_basis(x, y, 0);
  auto img = apply_hom_differential(x, y, 0, b);
  auto ker = kernel_basis(img);
  auto cyc = b * ker;
  GradedHomLayout<K> lay(x, y, 0);
  std::vector<ChainMap<K>> out;
  for (std::size_t c = 0; c < cyc.cols(); ++c) {
    ChainMap<K> f{x.lo, {}};
    for (int j = x.lo; j <= x.hi; ++j) f.maps.push_back(lay.read(cyc, j, c));
    out.push_back(std::move(f));
  }
  return out;
}

/// d s + s d for the given degree -1 hom element s.
inline ChainMap<K> null_homotopic(const Complex<K>& x, const Complex<K>& y, const Matrix<K>& s) {
  auto img = apply_hom_differential(x, y, -1, s);
  GradedHomLayout<K> lay(x, y, 0);
  ChainMap<K> f{x.lo, {}};
  for (int j = x.lo; j <= x.hi; ++j) f.maps.push_back(lay.read(img, j));
  return f;
}

inline ChainMap<K> add_chain(const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& f, const ChainMap<K>& g) {
  ChainMap<K> h{x.lo, {}};
  for (int i = x.lo; i <= x.hi; ++i) h.maps.push_back(add(component(x, y, f, i), component(x, y, g, i)));
  return h;
}

/// All ordered pairs when exhaustive, otherwise `samples` uniform draws.
inline std::vector<std::pair<std::size_t, std::size_t>> index_pairs(std::size_t n, bool exhaustive, int samples,
                                                                    Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (n == 0) return out;
  if (exhaustive) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out.push_back({i, j});
  } else {
    for (int s = 0; s < samples; ++s) out.push_back({rng.below(n), rng.below(n)});
  }
  return out;
}

// --------------------------------------------------------------- families

struct Families {
  const Params& params;
  BaseAlgebra<K> alg;
  QuiverPtr q;
  std::vector<AModule<K>> modules;

  explicit Families(const Params& p) : params(p), alg(p.algebra()), q(p.q()), modules(all_modules(alg, p.max_dim, p.limit)) {}

  std::vector<AModule<K>> projective_modules() const {
    std::vector<AModule<K>> out;
    for (const auto& m : modules)
      if (is_projective(alg, m)) out.push_back(m);
    return out;
  }
  std::vector<Rep<K>> reps() const { return all_reps(alg, q, modules, params.limit); }
  std::vector<Rep<K>> vertexwise_projective_reps() const { return all_reps(alg, q, projective_modules(), params.limit); }
};

// ------------------------------------------------------------------ reports

struct Failure {
  std::string case_id;
  std::string reason;
  Json witness;
};

struct Report {
  std::string suite;
  Params params;
  std::size_t cases = 0;
  std::vector<Failure> failures;
  std::map<std::string, std::size_t> counts;
  double seconds = 0;
  double slowest_case = 0;

  bool passed() const { return failures.empty(); }
};

inline constexpr std::size_t kMaxWitnesses = 10;

inline Json report_to_json(const Report& r) {
  Json failures = Json::array();
  for (std::size_t i = 0; i < r.failures.size() && i < kMaxWitnesses; ++i) {
    const auto& f = r.failures[i];
    failures.push_back({{"case", f.case_id},
                        {"reason", f.reason},
                        {"witness", f.witness},
                        {"recheck", "qrep verify " + r.suite + " --witness <file holding this witness>"}});
  }
  Json out = {{"suite", r.suite},
              {"params", params_to_json(r.params)},
              {"cases", r.cases},
              {"failure_count", r.failures.size()},
              {"failures", failures},
              {"counts", r.counts},
              {"status", r.passed() ? "pass" : "fail"}};
  if (r.params.timing) out["timing"] = {{"seconds", r.seconds}, {"slowest_case_seconds", r.slowest_case}};
  return out;
}

/// Runs cases in order, timing each and collecting failures.
class Runner {
 public:
  Runner(std::string suite, const Params& p) {
    report_.suite = std::move(suite);
    report_.params = p;
    start_ = std::chrono::steady_clock::now();
  }

  /// check returns a failure reason or nullopt; witness is only built on failure.
  void run_case(const std::function<std::optional<std::string>()>& check, const std::function<Json()>& witness) {
    auto t0 = std::chrono::steady_clock::now();
    std::optional<std::string> reason;
    try {
      reason = check();
    } catch (const MathError& e) {
      reason = std::string("math error: ") + e.what();
    }
    double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    report_.slowest_case = std::max(report_.slowest_case, dt);
    ++report_.cases;
    char id[32];
    std::snprintf(id, sizeof id, "case-%06zu", report_.cases);
    if (reason) {
      Json w = witness();
      w["suite"] = report_.suite;
      w["params"] = params_to_json(report_.params);
      report_.failures.push_back({id, *reason, std::move(w)});
    }
  }

  void count(const std::string& key, std::size_t by = 1) { report_.counts[key] += by; }

  Report finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  Report report_;
  std::chrono::steady_clock::time_point start_;
};

// ------------------------------------------------------------- case checks

inline std::optional<std::string> adjunction_case(const BaseAlgebra<K>& alg, const AModule<K>& m, const Rep<K>& x,
                                                  std::size_t v) {
  int vid = x.quiver->vertices()[v];
  auto l = hom_rep_dim(e_lambda(x.quiver, vid, m), x);
  auto r = hom_dim(m, x.mods[v]);
  if (l != r) return "dim Hom(e_lambda M, X) = " + std::to_string(l) + " but dim Hom(M, X_v) = " + std::to_string(r);
  auto l2 = hom_rep_dim(x, e_rho(x.quiver, vid, m));
  auto r2 = hom_dim(x.mods[v], m);
  if (l2 != r2) return "dim Hom(X, e_rho M) = " + std::to_string(l2) + " but dim Hom(X_v, M) = " + std::to_string(r2);
  (void)alg;
  return std::nullopt;
}

/// eta_{X,v} onto and Ext^1_A(A, Ker eta_{X,v}) = 0 at every vertex.
inline bool orthogonal_conditions(const BaseAlgebra<K>& alg, const Rep<K>& x) {
  auto a = point_rep(free_module(alg, 1));
  for (std::size_t v = 0; v < x.quiver->vertex_count(); ++v) {
    auto e = eta(x, v);
    if (rank(e.map) != e.map.rows()) return false;
    auto ker = kernel(x.mods[v], e.map);
    if (ext_dim(alg, a, point_rep(ker.module), 1, 1) != 0) return false;
  }
  return true;
}

/// A at vertex v and zero elsewhere: vertexwise projective, and Ext^1 of it
/// into X detects failure of eta_{X,v} to be onto.
inline std::vector<Rep<K>> canonical_witnesses(const BaseAlgebra<K>& alg, QuiverPtr q) {
  std::vector<Rep<K>> out;
  for (std::size_t v = 0; v < q->vertex_count(); ++v) {
    Rep<K> r = zero_rep(alg.field, q);
    r.mods[v] = free_module(alg, 1);
    for (std::size_t a = 0; a < q->arrow_count(); ++a)
      r.maps[a] = Matrix<K>(alg.field, r.dim(q->target(a)), r.dim(q->source(a)));
    out.push_back(r);
  }
  return out;
}

inline std::optional<std::string> homotopy_factorization_case(const BaseAlgebra<K>& alg, const Complex<K>& x,
                                                              const Complex<K>& y, const ChainMap<K>& f,
                                                              const ChainMap<K>& g) {
  auto verdict = homotopic_cw(alg, x, y, f, g);
  auto h = subtract_chain(x, y, f, g);
  auto beta = factor_through_divide(x, y, h);
  if (verdict.homotopic != beta.has_value())
    return std::string("homotopy solver says ") + (verdict.homotopic ? "homotopic" : "not homotopic") +
           " but a factorization through I(X) " + (beta ? "exists" : "does not exist");
  auto dob = divide_object(x);
  if (verdict.factorization) {
    const auto& b = *verdict.factorization;
    if (!is_chain_map(dob.object, y, b)) return "factorization built from the homotopy is not a chain map";
    if (!(compose_chain(x, dob.object, y, b, dob.alpha) == h)) return "factorization built from the homotopy misses f - g";
  }
  if (beta) {
    auto s = homotopy_from_factorization(x, y, *beta);
    if (!verify_homotopy(x, y, f, g, s)) return "homotopy built from the factorization fails";
  }
  if (!is_divide_class(alg, dob.object)) return "I(X) is not in the divide class";
  return std::nullopt;
}

inline std::optional<std::string> cofibrant_replacement_case(const BaseAlgebra<K>& alg, const Complex<K>& x,
                                                             int length) {
  auto c = cofibrant_replacement(alg, x, length);
  for (const auto& [name, ok] : c.flags)
    if (!ok) return "cofibrant replacement flag '" + name + "' is false";
  auto f = fibrant_replacement(alg, x);
  for (const auto& [name, ok] : f.flags)
    if (!ok) return "fibrant replacement flag '" + name + "' is false";
  return std::nullopt;
}

// ------------------------------------------------------------------ suites

inline Report check_adjunction(const Params& p) {
  Families fam(p);
  Runner run("adjunction", p);
  auto body = [&](const AModule<K>& m, const Rep<K>& x, std::size_t v) {
    run.run_case([&] { return adjunction_case(fam.alg, m, x, v); },
                 [&] { return Json{{"M", module_to_json(m)}, {"X", rep_to_json(x)}, {"vertex", x.quiver->vertices()[v]}}; });
  };
  if (p.exhaustive) {
    auto reps = fam.reps();
    for (const auto& m : fam.modules)
      for (const auto& x : reps)
        for (std::size_t v = 0; v < fam.q->vertex_count(); ++v) body(m, x, v);
  } else {
    Rng rng(p.seed);
    for (int s = 0; s < p.samples; ++s) {
      auto m = fam.modules[rng.below(fam.modules.size())];
      auto x = random_rep(fam.alg, fam.q, fam.modules, rng);
      body(m, x, rng.below(fam.q->vertex_count()));
    }
  }
  return run.finish();
}

inline Report check_orthogonal_class(const Params& p) {
  Families fam(p);
  Runner run("orthogonal_class", p);
  Rng rng(p.seed);
  std::vector<Rep<K>> xs, ws;
  auto wpool = fam.vertexwise_projective_reps();
  if (p.exhaustive) {
    xs = fam.reps();
    ws = wpool;
  } else {
    for (int s = 0; s < p.samples; ++s) xs.push_back(random_rep(fam.alg, fam.q, fam.modules, rng));
    for (int s = 0; s < p.samples; ++s) ws.push_back(wpool[rng.below(wpool.size())]);
  }
  for (auto& w : canonical_witnesses(fam.alg, fam.q)) ws.push_back(w);
  std::vector<Resolution<K>> wres;
  for (const auto& w : ws) wres.push_back(projective_resolution(fam.alg, w, 1));
  for (const auto& x : xs) {
    bool cond = orthogonal_conditions(fam.alg, x);
    if (cond) {
      run.count("conditions_hold");
      std::optional<std::size_t> bad;
      run.run_case(
          [&]() -> std::optional<std::string> {
            for (std::size_t i = 0; i < ws.size(); ++i)
              if (ext_dim_from(fam.alg, wres[i], x, 1) != 0) {
                bad = i;
                return "conditions hold but Ext^1(W, X) != 0";
              }
            return std::nullopt;
          },
          [&] { return Json{{"X", rep_to_json(x)}, {"W", rep_to_json(ws[*bad])}}; });
    } else {
      run.count("conditions_fail");
      run.run_case(
          [&]() -> std::optional<std::string> {
            for (std::size_t i = 0; i < ws.size(); ++i)
              if (ext_dim_from(fam.alg, wres[i], x, 1) != 0) return std::nullopt;
            return "conditions fail but no generated W has Ext^1(W, X) != 0 (unwitnessed)";
          },
          [&] { return Json{{"X", rep_to_json(x)}}; });
    }
  }
  return run.finish();
}

inline Report check_hovey(const Params& p) {
  Families fam(p);
  Runner run("hovey", p);
  Rng rng(p.seed);
  std::vector<Complex<K>> xs;
  auto pool = fam.reps();
  if (p.exhaustive) xs = all_complexes(fam.alg, fam.q, pool, p.window, p.limit);
  else
    for (int s = 0; s < p.samples; ++s) xs.push_back(random_complex(fam.alg, fam.q, pool, p.window, rng));
  struct Info {
    bool cof, triv, fib;
  };
  std::vector<Info> info;
  for (const auto& x : xs) info.push_back({is_cofibrant_cw(fam.alg, x), is_trivial_cw(x), is_fibrant_cw(x)});
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const auto& in = info[i];
    run.run_case(
        [&]() -> std::optional<std::string> {
          bool lhs = in.cof && in.triv && in.fib;
          if (lhs != is_divide_class(fam.alg, xs[i])) return "cofibrant, trivial and fibrant disagrees with the divide class";
          return std::nullopt;
        },
        [&] { return Json{{"X", complex_to_json(xs[i])}}; });
  }
  for (auto [i, j] : index_pairs(xs.size(), p.exhaustive, p.samples, rng)) {
    const auto &a = info[i], &b = info[j];
    bool left = a.cof && b.triv && b.fib;   // (C, W n F)
    bool right = a.cof && a.triv && b.fib;  // (C n W, F)
    if (!left && !right) {
      if (!a.cof && b.triv && b.fib && ext1_complex_dim(fam.alg, xs[i], xs[j]) != 0) run.count("non_cofibrant_witnessed");
      continue;
    }
    if (left) run.count("pairs_cofibrant_vs_trivially_fibrant");
    if (right) run.count("pairs_trivially_cofibrant_vs_fibrant");
    run.run_case(
        [&]() -> std::optional<std::string> {
          auto e = ext1_complex_dim(fam.alg, xs[i], xs[j]);
          if (e != 0) return "Ext^1 = " + std::to_string(e) + " between orthogonal classes";
          return std::nullopt;
        },
        [&] { return Json{{"X", complex_to_json(xs[i])}, {"Y", complex_to_json(xs[j])}}; });
  }
  return run.finish();
}

/// Fibrant and cofibrant complexes built from vertexwise projective terms.
inline std::vector<Complex<K>> fibrant_cofibrant_family(const Families& fam, Rng& rng, bool exhaustive, int samples) {
  auto pool = fam.vertexwise_projective_reps();
  std::vector<Complex<K>> out;
  if (exhaustive) {
    for (auto& c : all_complexes(fam.alg, fam.q, pool, fam.params.window, fam.params.limit))
      if (is_fibrant_cw(c)) out.push_back(std::move(c));
    return out;
  }
  for (int tries = 0; static_cast<int>(out.size()) < samples && tries < 100 * samples; ++tries) {
    auto c = random_complex(fam.alg, fam.q, pool, fam.params.window, rng);
    if (is_fibrant_cw(c)) out.push_back(std::move(c));
  }
  return out;
}

inline Report check_homotopy_factorization(const Params& p) {
  Families fam(p);
  Runner run("homotopy_factorization", p);
  Rng rng(p.seed);
  auto xs = fibrant_cofibrant_family(fam, rng, p.exhaustive, p.samples);
  run.count("objects", xs.size());
  auto body = [&](const Complex<K>& x, const Complex<K>& y, const ChainMap<K>& f, const ChainMap<K>& g) {
    run.run_case([&] { return homotopy_factorization_case(fam.alg, x, y, f, g); },
                 [&] {
                   return Json{{"X", complex_to_json(x)},
                               {"Y", complex_to_json(y)},
                               {"f", chain_map_to_json(x, y, f)},
                               {"g", chain_map_to_json(x, y, g)}};
                 });
  };
  auto cases_for = [&](const Complex<K>& x, const Complex<K>& y) {
    auto basis = chain_map_basis(x, y);
    auto zero = zero_chain_map(x, y);
    auto hb = graded_hom_basis(x, y, -1);
    // every basis map against zero, and a random map against a homotopic perturbation
    for (const auto& f : basis) body(x, y, f, zero);
    if (basis.empty()) {
      body(x, y, zero, zero);
      return;
    }
    ChainMap<K> f = zero;
    for (const auto& b : basis)
      if (rng.below(2)) f = add_chain(x, y, f, b);
    Matrix<K> s(fam.alg.field, hb.rows(), 1);
    for (std::size_t c = 0; c < hb.cols(); ++c)
      if (rng.below(2)) s = s + hb.block(0, hb.rows(), c, 1);
    body(x, y, f, add_chain(x, y, f, null_homotopic(x, y, s)));
  };
  if (p.exhaustive) {
    for (const auto& x : xs)
      for (const auto& y : xs) cases_for(x, y);
  } else if (!xs.empty()) {
    for (int s = 0; s < p.samples; ++s) cases_for(xs[rng.below(xs.size())], xs[rng.below(xs.size())]);
  }
  return run.finish();
}

/// Complexes of vertexwise projective representations with eta chain-split.
/// `differ` counts candidates where chain-level and degreewise splitting disagree.
inline std::vector<Complex<K>> dgprj_op_family(const Families& fam, Rng& rng, bool exhaustive, int samples,
                                               std::size_t& differ) {
  auto pool = fam.vertexwise_projective_reps();
  std::vector<Complex<K>> out;
  auto consider = [&](Complex<K>& c) {
    bool chain = is_dgprj_op(fam.alg, c, SplitMode::chain);
    if (chain != is_dgprj_op(fam.alg, c, SplitMode::degreewise)) ++differ;
    if (chain) out.push_back(std::move(c));
  };
  if (exhaustive) {
    for (auto& c : all_complexes(fam.alg, fam.q, pool, fam.params.window, fam.params.limit)) consider(c);
    return out;
  }
  for (int tries = 0; static_cast<int>(out.size()) < samples && tries < 100 * samples; ++tries) {
    auto c = random_complex(fam.alg, fam.q, pool, fam.params.window, rng);
    consider(c);
  }
  return out;
}

inline Report check_derived_equivalence(const Params& p) {
  Families fam(p);
  Runner run("derived_equivalence", p);
  Rng rng(p.seed);
  std::size_t differ = 0;
  auto xs = dgprj_op_family(fam, rng, p.exhaustive, p.samples, differ);
  run.count("objects", xs.size());
  run.count("split_modes_differ", differ);
  std::vector<Certificate<K>> qs, rs;
  std::vector<ComplexResolution<K>> res;
  for (const auto& x : xs) {
    qs.push_back(cofibrant_replacement(fam.alg, x, p.length));
    rs.push_back(fibrant_replacement(fam.alg, x));
    res.push_back(resolve_complex(fam.alg, x, p.length));
  }
  for (auto [i, j] : index_pairs(xs.size(), p.exhaustive, p.samples, rng)) {
      run.run_case(
          [&]() -> std::optional<std::string> {
            auto a = homotopy_category_hom_dim_from(qs[i], rs[j]);
            auto b = derived_hom_dim_from(res[i], xs[j], 0);
            if (a != b)
              return "homotopy category hom dim " + std::to_string(a) + " != derived hom dim " + std::to_string(b);
            return std::nullopt;
          },
          [&] { return Json{{"X", complex_to_json(xs[i])}, {"Y", complex_to_json(xs[j])}}; });
    }
  return run.finish();
}

inline Report check_cok_ext(const Params& p) {
  Families fam(p);
  Runner run("cok_ext", p);
  Rng rng(p.seed);
  if (p.quiver != "A2") throw InputError("cok_ext runs on the quiver A2 only");
  std::vector<Rep<K>> xs;
  auto all = fam.reps();
  for (auto& x : all)
    if (is_mono_object(x)) xs.push_back(x);
  if (!p.exhaustive) {
    std::vector<Rep<K>> picked;
    for (int s = 0; s < p.samples && !xs.empty(); ++s) picked.push_back(xs[rng.below(xs.size())]);
    xs = picked;
  }
  run.count("objects", xs.size());
  std::vector<Rep<K>> images;
  std::vector<Resolution<K>> rx, ri;
  for (const auto& x : xs) {
    images.push_back(psi0(fam.alg, x));
    rx.push_back(projective_resolution(fam.alg, x, p.length));
    ri.push_back(projective_resolution(fam.alg, images.back(), p.length));
  }
  for (std::size_t a = 0; a < xs.size(); ++a)
    for (std::size_t b = 0; b < xs.size(); ++b)
      for (int i = 0; i <= p.max_i; ++i)
        run.run_case(
            [&]() -> std::optional<std::string> {
              auto l = ext_dim_from(fam.alg, rx[a], xs[b], i);
              auto r = ext_dim_from(fam.alg, ri[a], images[b], i);
              if (l != r) return "Ext^" + std::to_string(i) + ": " + std::to_string(l) + " vs " + std::to_string(r);
              return std::nullopt;
            },
            [&] { return Json{{"X", rep_to_json(xs[a])}, {"Y", rep_to_json(xs[b])}, {"i", i}}; });
  return run.finish();
}

inline Report check_resolution_independence(const Params& p) {
  Families fam(p);
  Runner run("resolution_independence", p);
  Rng rng(p.seed);
  std::vector<Rep<K>> xs;
  if (p.exhaustive) xs = fam.reps();
  else
    for (int s = 0; s < p.samples; ++s) xs.push_back(random_rep(fam.alg, fam.q, fam.modules, rng));
  std::vector<Resolution<K>> rmin, rred;
  for (const auto& x : xs) {
    rmin.push_back(projective_resolution(fam.alg, x, p.max_i, CoverPolicy::minimal));
    rred.push_back(projective_resolution(fam.alg, x, p.max_i, CoverPolicy::redundant));
  }
  for (auto [a, b] : index_pairs(xs.size(), p.exhaustive, p.samples, rng)) {
      for (int i = 0; i <= p.max_i; ++i)
        run.run_case(
            [&]() -> std::optional<std::string> {
              auto l = ext_dim_from(fam.alg, rmin[a], xs[b], i);
              auto r = ext_dim_from(fam.alg, rred[a], xs[b], i);
              if (l != r) return "Ext^" + std::to_string(i) + " minimal " + std::to_string(l) + " vs redundant " + std::to_string(r);
              return std::nullopt;
            },
            [&] { return Json{{"X", rep_to_json(xs[a])}, {"Y", rep_to_json(xs[b])}, {"i", i}}; });
    }
  return run.finish();
}

inline Report check_cofibrant_replacement(const Params& p) {
  Families fam(p);
  Runner run("cofibrant_replacement", p);
  Rng rng(p.seed);
  std::vector<Complex<K>> xs;
  auto pool = fam.reps();
  if (p.exhaustive) xs = all_complexes(fam.alg, fam.q, pool, p.window, p.limit);
  else
    for (int s = 0; s < p.samples; ++s) xs.push_back(random_complex(fam.alg, fam.q, pool, p.window, rng));
  for (const auto& x : xs)
    run.run_case([&] { return cofibrant_replacement_case(fam.alg, x, p.length); },
                 [&] { return Json{{"X", complex_to_json(x)}}; });
  return run.finish();
}

// ----------------------------------------------------------------- registry

struct SuiteInfo {
  std::string name;
  std::string summary;
  std::function<Report(const Params&)> run;
};

inline const std::vector<SuiteInfo>& suites() {
  static const std::vector<SuiteInfo> s{
      {"adjunction", "dim Hom(e_lambda M, X) = dim Hom(M, X_v) and dim Hom(X, e_rho M) = dim Hom(X_v, M)",
       check_adjunction},
      {"cofibrant_replacement", "replacement certificates re-validate on generated complexes",
       check_cofibrant_replacement},
      {"cok_ext", "Ext^i(X, Y) = Ext^i(psi0 X, psi0 Y) on mono arrow objects", check_cok_ext},
      {"derived_equivalence", "homotopy-category Hom = derived Hom in degree 0 on DG-projective-op complexes",
       check_derived_equivalence},
      {"homotopy_factorization", "chain homotopy exists iff f - g factors through I(X)", check_homotopy_factorization},
      {"hovey", "divide class membership and Ext^1 orthogonality of the model-structure classes", check_hovey},
      {"orthogonal_class", "eta onto with projective-orthogonal kernels iff Ext^1 from vertexwise projectives vanishes",
       check_orthogonal_class},
      {"resolution_independence", "Ext agrees between minimal and redundant resolutions",
       check_resolution_independence},
  };
  return s;
}

inline Report run_suite(const std::string& name, const Params& p) {
  for (const auto& s : suites())
    if (s.name == name) return s.run(p);
  throw InputError("unknown suite '" + name + "'");
}

/// Re-run the check recorded in a failure witness; returns a failure
/// reason or nullopt when the property holds for the witness.
inline std::optional<std::string> recheck_witness(const std::string& suite, const Params& p, const Json& w) {
  auto alg = p.algebra();
  auto rep = [&](const char* key) { return rep_from_json(alg, detail::child(w, key, "$"), std::string("$.") + key); };
  auto cx = [&](const char* key) { return complex_from_json(alg, detail::child(w, key, "$"), std::string("$.") + key); };
  if (suite == "adjunction") {
    auto x = rep("X");
    auto m = module_from_json(alg, detail::child(w, "M", "$"), "$.M");
    int vid = detail::as_int(detail::child(w, "vertex", "$"), "$.vertex");
    if (!x.quiver->has_vertex(vid)) throw ShapeError("$.vertex: unknown vertex");
    return adjunction_case(alg, m, x, x.quiver->vertex_index(vid));
  }
  if (suite == "orthogonal_class") {
    auto x = rep("X");
    bool cond = orthogonal_conditions(alg, x);
    std::vector<Rep<K>> ws = canonical_witnesses(alg, x.quiver);
    if (w.contains("W")) ws.push_back(rep("W"));
    bool any = false;
    for (const auto& wr : ws) any = any || ext_dim(alg, wr, x, 1, 1) != 0;
    if (cond && any) return "conditions hold but Ext^1(W, X) != 0";
    if (!cond && !any) return "conditions fail but no witness W has Ext^1(W, X) != 0 (unwitnessed)";
    return std::nullopt;
  }
  if (suite == "hovey") {
    auto x = cx("X");
    if (!w.contains("Y")) {
      bool lhs = is_cofibrant_cw(alg, x) && is_trivial_cw(x) && is_fibrant_cw(x);
      if (lhs != is_divide_class(alg, x)) return "cofibrant, trivial and fibrant disagrees with the divide class";
      return std::nullopt;
    }
    auto y = cx("Y");
    auto e = ext1_complex_dim(alg, x, y);
    if (e != 0) return "Ext^1 = " + std::to_string(e) + " between orthogonal classes";
    return std::nullopt;
  }
  if (suite == "homotopy_factorization") {
    auto x = cx("X"), y = cx("Y");
    auto f = chain_map_from_json(alg.field, x, y, detail::child(w, "f", "$"), "$.f");
    auto g = chain_map_from_json(alg.field, x, y, detail::child(w, "g", "$"), "$.g");
    return homotopy_factorization_case(alg, x, y, f, g);
  }
  if (suite == "derived_equivalence") {
    auto x = cx("X"), y = cx("Y");
    auto a = homotopy_category_hom_dim(alg, x, y, p.length);
    auto b = derived_hom_dim(alg, x, y, 0, p.length);
    if (a != b) return "homotopy category hom dim " + std::to_string(a) + " != derived hom dim " + std::to_string(b);
    return std::nullopt;
  }
  if (suite == "cok_ext" || suite == "resolution_independence") {
    auto x = rep("X"), y = rep("Y");
    int i = detail::as_int(detail::child(w, "i", "$"), "$.i");
    if (suite == "cok_ext") {
      auto [l, r] = ext_compare(alg, x, y, i, p.length);
      if (l != r) return "Ext^" + std::to_string(i) + ": " + std::to_string(l) + " vs " + std::to_string(r);
      return std::nullopt;
    }
    auto l = ext_dim(alg, x, y, i, std::max(i, 0), CoverPolicy::minimal);
    auto r = ext_dim(alg, x, y, i, std::max(i, 0), CoverPolicy::redundant);
    if (l != r) return "Ext^" + std::to_string(i) + " minimal " + std::to_string(l) + " vs redundant " + std::to_string(r);
    return std::nullopt;
  }
  if (suite == "cofibrant_replacement") return cofibrant_replacement_case(alg, cx("X"), p.length);
  throw InputError("unknown suite '" + suite + "'");
}

}  // namespace qrep::harness
