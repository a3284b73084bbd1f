/*
 * Bounded complexes: homology, disks, shift, cone, hom complexes,
 * homotopies and class predicates.
 */
#include <catch2/catch_amalgamated.hpp>

#include "qrep/complex.hpp"

using namespace qrep;

namespace {

using K = PrimeField;
using M = Matrix<K>;
const K gf2(2);
const BaseAlgebra<K> field_alg(gf2, 1);
const BaseAlgebra<K> dual_numbers(gf2, 2);

Rep<K> a_rep() { return point_rep(free_module(dual_numbers, 1)); }
Rep<K> k_rep() { return point_rep(simple_module(gf2)); }

// A --x--> A in degrees -1, 0
Complex<K> mult_by_x() {
  auto a = a_rep();
  return make_complex(dual_numbers, point_quiver(), -1, {a, a}, {{a.mods[0].op}});
}

// A -x-> A -x-> A -x-> A in degrees 0..3
Complex<K> periodic_segment() {
  auto a = a_rep();
  RepMorphism<K> x{a.mods[0].op};
  return make_complex(dual_numbers, point_quiver(), 0, {a, a, a, a}, {x, x, x});
}

}  // namespace

TEST_CASE("construction checks d^2 = 0 and shapes") {
  auto a = a_rep();
  CHECK_THROWS_AS(make_complex(dual_numbers, point_quiver(), 0, {a, a, a},
                               {{M::identity(gf2, 2)}, {M::identity(gf2, 2)}}),
                  InputError);
  CHECK_THROWS_AS(make_complex(dual_numbers, point_quiver(), 0, {a, k_rep()}, {{M::identity(gf2, 2)}}), ShapeError);
  CHECK_NOTHROW(periodic_segment());
}

TEST_CASE("homology") {
  auto d = disk(a_rep(), 0);
  for (int i = -2; i <= 2; ++i) CHECK(homology_dims(d, i)[0] == 0);
  auto c = concentrated(k_rep(), 0);
  CHECK(homology(c, 0).rep == k_rep());
  auto x = mult_by_x();
  CHECK(homology_dims(x, 0)[0] == 1);
  CHECK(homology_dims(x, -1)[0] == 1);
  CHECK(homology(x, 0).rep.mods[0] == simple_module(gf2));
}

TEST_CASE("exactness") {
  CHECK(is_exact(disk(a_rep(), 3)));
  CHECK_FALSE(is_exact(concentrated(k_rep(), 0)));
  auto p = periodic_segment();
  CHECK_FALSE(is_exact(p));
  CHECK(is_exact_at(p, 1));
  CHECK(is_exact_at(p, 2));
  CHECK_FALSE(is_exact_at(p, 0));
  CHECK_FALSE(is_exact_at(p, 3));
}

TEST_CASE("disk, shift and cone") {
  auto d = disk(a_rep(), 0);
  CHECK(d.lo == -1);
  CHECK(disk(zero_rep(gf2, point_quiver()), 2).is_zero());
  CHECK(is_termwise_projective(dual_numbers, d));

  auto x = mult_by_x();
  auto s = shift(x, 1);
  CHECK(s.lo == -2);
  CHECK(homology_dims(s, -1)[0] == homology_dims(x, 0)[0]);
  CHECK(is_complex(s));

  auto c = cone(x, x, identity_chain_map(x));
  CHECK(is_complex(c));
  CHECK(is_exact(c));
  auto z = concentrated(zero_rep(gf2, point_quiver()), 0);
  auto c0 = cone(z, x, zero_chain_map(z, x));
  for (int i = -2; i <= 1; ++i) CHECK(homology_dims(c0, i) == homology_dims(x, i));
}

TEST_CASE("quasi-isomorphisms") {
  auto x = mult_by_x();
  CHECK(is_quasi_iso(x, x, identity_chain_map(x)));
  auto z = concentrated(zero_rep(gf2, point_quiver()), 0);
  auto d = disk(a_rep(), 0);
  CHECK(is_quasi_iso(z, d, zero_chain_map(z, d)));
  auto k0 = concentrated(k_rep(), 0);
  CHECK_FALSE(is_quasi_iso(k0, z, zero_chain_map(k0, z)));
  // quotient maps onto k[0] that are not quasi-isos
  auto a0 = concentrated(a_rep(), 0);
  ChainMap<K> q{0, {{M::from_ints(gf2, {{1, 0}})}}};
  CHECK(is_chain_map(a0, k0, q));
  CHECK_FALSE(is_quasi_iso(a0, k0, q));
  auto xk = ChainMap<K>{-1, {{M(gf2, 0, 2)}, {M::from_ints(gf2, {{1, 0}})}}};
  CHECK(is_chain_map(x, k0, xk));
  CHECK_FALSE(is_quasi_iso(x, k0, xk));  // H^{-1} = k is lost
}

TEST_CASE("hom complexes") {
  auto d = disk(a_rep(), 0);
  auto ys = std::vector<Complex<K>>{mult_by_x(), periodic_segment(), concentrated(k_rep(), 0), d};
  for (const auto& y : ys) {
    auto h = hom_complex(d, y);
    for (int n = h.lo - 1; n <= h.hi + 1; ++n) CHECK(h.cohomology_dim(n) == 0);
  }
  auto m = concentrated(a_rep(), 0), n = concentrated(k_rep(), 0);
  auto h = hom_complex(m, n);
  CHECK(h.lo == 0);
  CHECK(h.hi == 0);
  CHECK(h.cohomology_dim(0) == 1);
  auto x = mult_by_x();
  auto hx = hom_complex(x, x);
  CHECK(hx.cohomology_dim(0) >= 1);
  for (int t = hx.lo; t <= hx.hi; ++t) CHECK(hx.cohomology_dim(t) == hom_cohomology_dim(x, x, t));
  // D^{n+1} D^n = 0 in coordinates
  for (int t = hx.lo; t + 1 < hx.hi; ++t) CHECK((hx.diff[t + 1 - hx.lo] * hx.diff[t - hx.lo]).is_zero());
}

TEST_CASE("termwise projective into exact gives exact hom complex") {
  auto p = mult_by_x();
  // truncations of the periodic complex are exact only in the interior, so
  // use a genuinely exact target: a sum of disks
  auto e = complex_direct_sum<K>({disk(k_rep(), 0), disk(a_rep(), 1)}).sum;
  auto h = hom_complex(p, e);
  for (int n = h.lo; n <= h.hi; ++n) CHECK(h.cohomology_dim(n) == 0);
}

TEST_CASE("homotopies") {
  auto d = disk(a_rep(), 0);
  auto id = identity_chain_map(d), zero = zero_chain_map(d, d);
  auto s = homotopic(d, d, id, id);
  REQUIRE(s);
  CHECK(verify_homotopy(d, d, id, id, *s));
  auto t = homotopic(d, d, id, zero);
  REQUIRE(t);
  CHECK(verify_homotopy(d, d, id, zero, *t));
  CHECK(t->maps[1][0] == M::identity(gf2, 2));
  auto k0 = concentrated(k_rep(), 0);
  CHECK_FALSE(homotopic(k0, k0, identity_chain_map(k0), zero_chain_map(k0, k0)));
  auto x = mult_by_x();
  CHECK_FALSE(homotopic(x, x, identity_chain_map(x), zero_chain_map(x, x)));
}

TEST_CASE("class predicates for complexes") {
  auto d = disk(a_rep(), 0);
  CHECK(is_projective_complex(dual_numbers, d));
  auto a0 = concentrated(a_rep(), 0);
  CHECK(is_dg_projective_bounded(dual_numbers, a0));
  CHECK_FALSE(is_projective_complex(dual_numbers, a0));
  auto p = periodic_segment();
  auto proj = [](const Rep<K>& r) { return is_projective_rep(dual_numbers, r); };
  CHECK(in_C_of<K>(p, proj));
  CHECK_FALSE(in_ex<K>(p, proj));
  CHECK_FALSE(in_tilde<K>(p, proj));
  // exact, but the cycles are k
  auto kd = disk(k_rep(), 0);
  CHECK(is_exact(kd));
  CHECK_FALSE(in_tilde<K>(kd, proj));
}

TEST_CASE("complexes of representations") {
  auto q = named_quiver("A2");
  Rep<K> p1{q, {simple_module(gf2), simple_module(gf2)}, {M::identity(gf2, 1)}};
  Rep<K> s2{q, {zero_module(gf2), simple_module(gf2)}, {M(gf2, 1, 0)}};
  // S2 -> P1 inclusion, degrees -1, 0: resolution of S1
  auto c = make_complex(field_alg, q, -1, {s2, p1}, {{M(gf2, 1, 0), M::identity(gf2, 1)}});
  CHECK(homology_dims(c, 0) == std::vector<std::size_t>{1, 0});
  CHECK(homology_dims(c, -1) == std::vector<std::size_t>{0, 0});
  auto h = homology(c, 0).rep;
  CHECK(h.dim(0) == 1);
  CHECK(h.dim(1) == 0);
  auto vc = vertex_complex(c, 1);
  CHECK(is_exact(vc));
}
