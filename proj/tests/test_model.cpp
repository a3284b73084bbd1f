/*
 * Componentwise model structure: predicates, cofibrant and fibrant
 * replacements with their certificates, the divide class and homotopy.
 */
#include <catch2/catch_amalgamated.hpp>

#include "qrep/model.hpp"

using namespace qrep;

namespace {

using K = PrimeField;
using M = Matrix<K>;
const K gf2(2);
const BaseAlgebra<K> field_alg(gf2, 1);
const BaseAlgebra<K> dual_numbers(gf2, 2);

QuiverPtr a2() { return named_quiver("A2"); }
AModule<K> k_mod() { return simple_module(gf2); }
AModule<K> zero() { return zero_module(gf2); }
Rep<K> arrow_rep(const AModule<K>& top, const AModule<K>& bot, const M& f) { return {a2(), {top, bot}, {f}}; }
Rep<K> p1() { return arrow_rep(k_mod(), k_mod(), M::identity(gf2, 1)); }
Rep<K> s1() { return arrow_rep(k_mod(), zero(), M(gf2, 0, 1)); }
Rep<K> s2() { return arrow_rep(zero(), k_mod(), M(gf2, 1, 0)); }

void check_certificate(const Certificate<K>& c) {
  for (const auto& [name, value] : c.flags) {
    INFO(name);
    CHECK(value);
  }
}

}  // namespace

TEST_CASE("componentwise predicates") {
  auto x = concentrated(s1(), 0);
  CHECK(is_cofibrant_cw(field_alg, x));
  CHECK(is_fibrant_cw(x));
  CHECK_FALSE(is_fibrant_cw(concentrated(s2(), 0)));
  CHECK(is_fibrant_cw(concentrated(p1(), 0)));
  CHECK_FALSE(is_cofibrant_cw(dual_numbers, concentrated(arrow_rep(zero(), k_mod(), M(gf2, 1, 0)), 0)));
  CHECK(is_trivial_cw(disk(s2(), 0)));
  CHECK_FALSE(is_trivial_cw(x));
  CHECK(is_divide_class(field_alg, disk(p1(), 0)));
  CHECK_FALSE(is_divide_class(field_alg, disk(s2(), 0)));
  CHECK_FALSE(is_divide_class(field_alg, x));
}

TEST_CASE("cofibrant replacement of an already good object is the identity") {
  auto x = concentrated(s1(), 0);
  auto c = cofibrant_replacement(field_alg, x, 4);
  check_certificate(c);
  CHECK(c.object == x);
  CHECK_FALSE(c.cut);
  CHECK(c.map.maps[0] == identity_morphism(s1()));
}

TEST_CASE("cofibrant replacement over dual numbers") {
  auto k = k_mod();
  std::vector<Complex<K>> xs{
      concentrated(arrow_rep(zero(), k, M(gf2, 1, 0)), 0),
      concentrated(arrow_rep(k, zero(), M(gf2, 0, 1)), 0),
      concentrated(arrow_rep(k, k, M::identity(gf2, 1)), 0),
      disk(arrow_rep(k, k, M::identity(gf2, 1)), 1),
  };
  for (std::size_t i = 0; i < xs.size(); ++i) {
    auto c = cofibrant_replacement(dual_numbers, xs[i], 6);
    check_certificate(c);
    CHECK(c.ok());
    CHECK(is_cofibrant_cw(dual_numbers, c.object));
    // the exact disk resolves without truncation
    if (i < 3) CHECK(c.cut == std::optional<int>(-6));
  }
}

TEST_CASE("cofibrant replacement on the fork quiver") {
  auto q = named_quiver("fork");
  auto k = k_mod();
  Rep<K> r{q, {k, k, zero()}, {M::identity(gf2, 1), M(gf2, 0, 1)}};
  auto x = concentrated(r, 0);
  auto c = cofibrant_replacement(dual_numbers, x, 4);
  check_certificate(c);
  CHECK(is_cofibrant_cw(dual_numbers, c.object));

  Rep<K> src{q, {k, zero(), zero()}, {M(gf2, 0, 1), M(gf2, 0, 1)}};
  auto c2 = cofibrant_replacement(dual_numbers, concentrated(src, 0), 4);
  check_certificate(c2);
}

TEST_CASE("fibrant replacement") {
  auto x = concentrated(s2(), 0);
  auto f = fibrant_replacement(field_alg, x);
  check_certificate(f);
  CHECK(f.object.lo == 0);
  CHECK(f.object.hi == 1);
  CHECK(f.object.term(0).dim(0) == 1);
  CHECK(f.object.term(1).dim(0) == 1);
  CHECK(is_fibrant_cw(f.object));

  auto fx = fibrant_replacement(field_alg, concentrated(p1(), 0));
  CHECK(fx.object == concentrated(p1(), 0));

  auto q = named_quiver("fork");
  auto k = k_mod();
  Rep<K> r{q, {zero(), k, k}, {M(gf2, 1, 0), M(gf2, 1, 0)}};
  auto fr = fibrant_replacement(dual_numbers, concentrated(r, 0));
  check_certificate(fr);
}

TEST_CASE("divide object and factorizations") {
  auto x = concentrated(p1(), 0);
  auto io = divide_object(x);
  CHECK(is_complex(io.object));
  CHECK(is_divide_class(field_alg, io.object));
  CHECK(is_chain_map(x, io.object, io.alpha));

  auto d = disk(p1(), 0);
  auto v = homotopic_cw(field_alg, d, d, identity_chain_map(d), zero_chain_map(d, d));
  CHECK(v.homotopic);
  REQUIRE(v.factorization);
  auto dd = divide_object(d);
  CHECK(is_chain_map(dd.object, d, *v.factorization));
  CHECK(compose_chain(d, dd.object, d, *v.factorization, dd.alpha) == identity_chain_map(d));
  auto beta = factor_through_divide(d, d, identity_chain_map(d));
  REQUIRE(beta);
  auto s0 = homotopy_from_factorization(d, d, *beta);
  CHECK(verify_homotopy(d, d, identity_chain_map(d), zero_chain_map(d, d), s0));

  auto s = concentrated(s1(), 0);
  auto w = homotopic_cw(field_alg, s, s, identity_chain_map(s), zero_chain_map(s, s));
  CHECK_FALSE(w.homotopic);
  CHECK_FALSE(factor_through_divide(s, s, identity_chain_map(s)));

  CHECK_THROWS_AS(homotopic_cw(field_alg, concentrated(s2(), 0), s, zero_chain_map(concentrated(s2(), 0), s),
                               zero_chain_map(concentrated(s2(), 0), s)),
                  InputError);
}

TEST_CASE("homotopy category hom agrees with derived hom") {
  std::vector<Complex<K>> xs{concentrated(s1(), 0), concentrated(s2(), 0), concentrated(p1(), 0),
                             concentrated(s1(), 1), disk(s2(), 0)};
  for (const auto& x : xs)
    for (const auto& y : xs) CHECK(homotopy_category_hom_dim(field_alg, x, y, 3) == derived_hom_dim(field_alg, x, y, 0, 3));

  auto k = k_mod();
  std::vector<Complex<K>> ys{concentrated(arrow_rep(zero(), k, M(gf2, 1, 0)), 0),
                             concentrated(arrow_rep(k, zero(), M(gf2, 0, 1)), 0),
                             concentrated(arrow_rep(k, k, M::identity(gf2, 1)), 0)};
  for (const auto& x : ys)
    for (const auto& y : ys)
      CHECK(homotopy_category_hom_dim(dual_numbers, x, y, 3) == derived_hom_dim(dual_numbers, x, y, 0, 3));
}
