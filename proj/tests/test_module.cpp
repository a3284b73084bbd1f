/*
 * Modules over k[x]/(x^n): homs, kernels and cokernels, projectivity,
 * covers and split tests.
 */
#include <catch2/catch_amalgamated.hpp>

#include "qrep/module.hpp"

using namespace qrep;

namespace {

using M = Matrix<PrimeField>;
const PrimeField gf2(2);
const BaseAlgebra<PrimeField> field_alg(gf2, 1);
const BaseAlgebra<PrimeField> dual_numbers(gf2, 2);

AModule<PrimeField> k_mod() { return simple_module(gf2); }
AModule<PrimeField> a_mod() { return free_module(dual_numbers, 1); }

// Oracle for projectivity over k[x]/(x^2): a module is free iff it is a sum of
// Jordan blocks of size 2, i.e. dim = 2 * rank(N).
bool free_by_jordan(const AModule<PrimeField>& m) { return m.dim() == 2 * rank(m.op); }

// All modules of dim <= 2 over k[x]/(x^2) with GF(2) coefficients.
std::vector<AModule<PrimeField>> all_small_modules() {
  std::vector<AModule<PrimeField>> out{zero_module(gf2), k_mod()};
  for (unsigned bits = 0; bits < 16; ++bits) {
    M n(gf2, 2, 2);
    for (int i = 0; i < 4; ++i) n(i / 2, i % 2) = (bits >> i) & 1;
    if ((n * n).is_zero()) out.emplace_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("module construction checks nilpotency") {
  CHECK_THROWS_AS(make_module(dual_numbers, M::identity(gf2, 1)), InputError);
  CHECK_NOTHROW(make_module(dual_numbers, a_mod().op));
  CHECK(power(a_mod().op, 2).is_zero());
}

TEST_CASE("hom dimensions") {
  CHECK(hom_dim(a_mod(), k_mod()) == 1);
  CHECK(hom_dim(AModule<PrimeField>(M(gf2, 2, 2)), AModule<PrimeField>(M(gf2, 3, 3))) == 6);
  CHECK(hom_dim(a_mod(), zero_module(gf2)) == 0);
  CHECK(hom_dim(a_mod(), a_mod()) == 2);
  for (const auto& f : hom_basis(a_mod(), a_mod())) CHECK(is_module_hom(a_mod(), a_mod(), f));
}

TEST_CASE("kernel, image, cokernel") {
  auto id = M::identity(gf2, 2);
  CHECK(kernel(a_mod(), id).module.dim() == 0);
  CHECK(cokernel(a_mod(), M(gf2, 2, 0)).module.dim() == 2);
  auto c = cokernel(a_mod(), a_mod().op);
  CHECK(c.module.dim() == 1);
  CHECK(c.module.op.is_zero());
  for (const auto& m : all_small_modules())
    for (const auto& n : all_small_modules())
      for (const auto& f : hom_basis(m, n)) {
        auto ker = kernel(m, f);
        auto im = image(n, f);
        CHECK(ker.module.dim() + im.module.dim() == m.dim());
        CHECK(is_module_hom(ker.module, m, ker.map));
        auto cok = cokernel(n, f);
        CHECK(is_module_hom(n, cok.module, cok.map));
        CHECK((cok.map * f).is_zero());
      }
}

TEST_CASE("projectivity") {
  CHECK(is_projective(dual_numbers, a_mod()));
  CHECK_FALSE(is_projective(dual_numbers, k_mod()));
  CHECK(is_projective(field_alg, AModule<PrimeField>(M(gf2, 3, 3))));
  for (const auto& m : all_small_modules()) {
    CHECK(is_projective(dual_numbers, m) == free_by_jordan(m));
    CHECK(is_injective(dual_numbers, m) == is_projective(dual_numbers, m));
  }
}

TEST_CASE("projective covers") {
  auto z = projective_epi(dual_numbers, zero_module(gf2));
  CHECK(z.proj.dim() == 0);
  auto p = projective_epi(dual_numbers, a_mod());
  CHECK(p.proj.dim() == 2);
  CHECK(rank(p.rho) == 2);
  auto q = projective_epi(dual_numbers, k_mod());
  CHECK(q.proj == a_mod());
  CHECK(q.rho == M::from_ints(gf2, {{1, 0}}));
  for (const auto& m : all_small_modules()) {
    auto c = projective_epi(dual_numbers, m);
    CHECK(is_projective(dual_numbers, c.proj));
    CHECK(is_module_hom(c.proj, m, c.rho));
    CHECK(rank(c.rho) == m.dim());
    CHECK(c.proj.dim() == 2 * (m.dim() - rank(m.op)));
    auto k = kernel(c.proj, c.rho);
    CHECK((c.rho * k.map).is_zero());
    CHECK(k.module.dim() + m.dim() == c.proj.dim());
  }
}

TEST_CASE("split epis and monos") {
  auto id = M::identity(gf2, 2);
  CHECK(is_split_epi(a_mod(), a_mod(), id));
  CHECK(is_split_mono(a_mod(), a_mod(), id));
  auto q = projective_epi(dual_numbers, k_mod());
  CHECK(rank(q.rho) == 1);
  CHECK_FALSE(is_split_epi(a_mod(), k_mod(), q.rho));
  CHECK(is_split_epi(a_mod(), zero_module(gf2), M(gf2, 0, 2)));
  // socle inclusion k -> A is mono but not split
  CHECK_FALSE(is_split_mono(k_mod(), a_mod(), M::from_ints(gf2, {{0}, {1}})));
}

TEST_CASE("direct sums") {
  auto s = direct_sum(gf2, {a_mod(), zero_module(gf2)});
  CHECK(s.sum == a_mod());
  auto t = direct_sum(gf2, {a_mod(), k_mod()});
  CHECK(t.sum.dim() == 3);
  CHECK(t.proj[1] * t.inj[1] == M::identity(gf2, 1));
  CHECK((t.proj[0] * t.inj[1]).is_zero());
}
