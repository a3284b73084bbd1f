/*
 * Exact matrices over GF(p) and Q: rank, kernels, solving, quotients,
 * and the matrix-unknown linear system builder.
 */
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "qrep/linear_system.hpp"

using namespace qrep;

namespace {

using M2 = Matrix<PrimeField>;
using MQ = Matrix<RationalField>;

const PrimeField gf2(2);
const PrimeField gf3(3);
const RationalField rat;

M2 random_matrix(const PrimeField& k, std::size_t r, std::size_t c, std::mt19937_64& rng) {
  M2 m(k, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<std::uint32_t>(rng() % k.characteristic());
  return m;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.sub(2, 5) == 4);
  for (std::uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS_AS(PrimeField(4), InputError);
  CHECK_THROWS_AS(f.inv(0), MathError);
}

TEST_CASE("rank examples") {
  CHECK(rank(M2::from_ints(gf2, {{1, 1}, {1, 1}})) == 1);
  CHECK(rank(M2(gf3, 3, 3)) == 0);
  CHECK(rank(MQ::identity(rat, 5)) == 5);
  // over GF(3) this matrix is singular, over Q it is not
  CHECK(rank(M2::from_ints(gf3, {{1, 2}, {2, 1}})) == 1);
  CHECK(rank(MQ::from_ints(rat, {{1, 2}, {2, 1}})) == 2);
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(MQ::identity(rat, 3)).cols() == 0);
  auto z = kernel_basis(M2(gf2, 0, 3));
  CHECK(z == M2::identity(gf2, 3));
  auto k = kernel_basis(M2::from_ints(gf2, {{1, 1}}));
  REQUIRE(k.cols() == 1);
  // enumeration of GF(2)^2: only (1,1) is a nonzero solution of x + y = 0
  CHECK(k == M2::from_ints(gf2, {{1}, {1}}));
}

TEST_CASE("solve examples") {
  auto b = M2::from_ints(gf2, {{1, 0}, {1, 1}});
  auto s = solve(M2::identity(gf2, 2), b);
  REQUIRE(s);
  CHECK(s->particular == b);
  CHECK_FALSE(solve(M2(gf2, 2, 2), b));

  auto s2 = solve(M2::from_ints(gf2, {{1, 1}}), M2::from_ints(gf2, {{1}}));
  REQUIRE(s2);
  CHECK(s2->particular == M2::from_ints(gf2, {{1}, {0}}));
  CHECK(s2->kernel == M2::from_ints(gf2, {{1}, {1}}));
  CHECK_THROWS_AS(solve(M2::identity(gf2, 2), M2(gf2, 3, 1)), ShapeError);
}

TEST_CASE("rational solve is exact") {
  auto a = MQ::from_ints(rat, {{2, 1}, {1, 3}});
  auto b = MQ::from_ints(rat, {{1}, {0}});
  auto s = solve(a, b);
  REQUIRE(s);
  CHECK(a * s->particular == b);
  CHECK(s->particular(0, 0) == RationalField::value_type(3, 5));
}

TEST_CASE("rank-nullity and solve soundness on random matrices") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 200; ++it) {
    const PrimeField& k = (it % 2) ? gf2 : gf3;
    std::size_t r = rng() % 5, c = rng() % 5;
    auto m = random_matrix(k, r, c, rng);
    auto kb = kernel_basis(m);
    CHECK(rank(m) + kb.cols() == c);
    CHECK((m * kb).is_zero());
    CHECK(rank(kb) == kb.cols());
    auto b = random_matrix(k, r, 2, rng);
    auto s = solve(m, b);
    if (s) CHECK(m * s->particular == b);
    // b inside the column space is always solvable
    auto x = random_matrix(k, c, 1, rng);
    CHECK(solve(m, m * x).has_value());
  }
}

TEST_CASE("quotient and complement") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 100; ++it) {
    std::size_t d = 1 + rng() % 4;
    auto s = column_basis(random_matrix(gf3, d, rng() % 4, rng));
    auto q = quotient_by(s);
    CHECK(q.proj.rows() == d - s.cols());
    CHECK((q.proj * s).is_zero());
    CHECK((q.proj * q.lift).is_identity());
  }
}

TEST_CASE("linear system with matrix unknowns") {
  // X * [[0,1],[0,0]] = [[0,1],[0,0]] * X : commutant of a Jordan block has dim 2
  LinearSystem<PrimeField> sys(gf2);
  auto n = M2::from_ints(gf2, {{0, 0}, {1, 0}});
  auto x = sys.add_unknown(2, 2);
  sys.add_equation(2, 2, {{x, std::nullopt, n, false}, {x, n, std::nullopt, true}});
  CHECK(sys.nullity() == 2);

  // two unknowns: X + Y = I, X = 0
  LinearSystem<RationalField> s2(rat);
  auto a = s2.add_unknown(2, 2), b = s2.add_unknown(2, 2);
  s2.add_equation(2, 2, {{a, std::nullopt, std::nullopt, false}, {b, std::nullopt, std::nullopt, false}},
                  MQ::identity(rat, 2));
  s2.fix(a, MQ(rat, 2, 2));
  auto r = s2.solve();
  REQUIRE(r);
  CHECK(r->particular[1] == MQ::identity(rat, 2));
  CHECK(r->kernel.empty());
}
