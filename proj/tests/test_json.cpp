/*
 * JSON reading and writing: canonical round trips, rational entries and
 * error messages that name the offending path.
 */
#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <string>

#include "qrep/json_io.hpp"

using namespace qrep;

namespace {

using K = PrimeField;
using M = Matrix<K>;
const K gf2(2);
const BaseAlgebra<K> dual_numbers(gf2, 2);

Rep<K> sample_rep() {
  auto q = named_quiver("A2");
  AModule<K> a(M::from_ints(gf2, {{0, 1}, {0, 0}}));
  return {q, {a, simple_module(gf2)}, {M::from_ints(gf2, {{0, 1}})}};
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("representation round trip") {
  auto r = sample_rep();
  auto text = dump_json(rep_to_json(r));
  auto back = rep_from_json(dual_numbers, parse_json_text(text, "x"), "$");
  CHECK(back == r);
  CHECK(dump_json(rep_to_json(back)) == text);
  CHECK(text.back() == '\n');
}

TEST_CASE("complex and chain map round trip") {
  auto r = sample_rep();
  auto d = disk(r, -1);
  auto j = complex_to_json(d);
  auto back = complex_from_json(dual_numbers, parse_json_text(dump_json(j), "x"), "$");
  CHECK(back == d);
  auto f = identity_chain_map(d);
  auto fj = chain_map_to_json(d, d, f);
  CHECK(chain_map_from_json(gf2, d, d, fj, "$") == f);
}

TEST_CASE("a bare representation reads as a complex in degree 0") {
  auto r = sample_rep();
  auto c = complex_from_json(dual_numbers, rep_to_json(r), "$");
  CHECK(c == concentrated(r, 0));
}

TEST_CASE("named and explicit quivers") {
  auto q = quiver_from_json(Json("fork"), "$");
  auto again = quiver_from_json(quiver_to_json(*q), "$");
  CHECK(again->vertex_count() == 3);
  CHECK(again->arrow_count() == 2);
  CHECK(quiver_to_json(*again) == quiver_to_json(*q));
  CHECK_THROWS_AS(quiver_from_json(Json("nonsense"), "$"), InputError);
}

TEST_CASE("rational entries") {
  RationalField qf;
  Matrix<RationalField> m(qf, 1, 3);
  m(0, 0) = RationalField::value_type(3);
  m(0, 1) = RationalField::value_type(-1, 2);
  m(0, 2) = RationalField::value_type(0);
  auto j = matrix_to_json(m);
  CHECK(j.dump() == R"([[3,"-1/2",0]])");
  CHECK(matrix_from_json(qf, j, 1, 3, "$") == m);
  CHECK_THROWS_AS(matrix_from_json(qf, Json::parse(R"([["x"]])"), 1, 1, "$"), InputError);
}

TEST_CASE("error messages name the path") {
  auto j = rep_to_json(sample_rep());
  j["modules"]["1"]["op"] = Json::parse("[[0, 1]]");
  auto msg = error_of([&] { rep_from_json(dual_numbers, j, "$"); });
  CHECK(msg.find("$.modules.1.op") != std::string::npos);

  auto k = rep_to_json(sample_rep());
  k["arrows"]["a"] = Json::parse("[[1]]");
  msg = error_of([&] { rep_from_json(dual_numbers, k, "$"); });
  CHECK(msg.find("$.arrows") != std::string::npos);

  auto c = complex_to_json(disk(sample_rep(), 0));
  c["terms"][0]["modules"]["1"]["op"] = Json::parse("[[\"a\"]]");
  msg = error_of([&] { complex_from_json(dual_numbers, c, "$"); });
  CHECK(msg.find("$.terms[0].modules.1.op") != std::string::npos);

  CHECK_THROWS_AS(parse_json_text("{", "input.json"), InputError);
  msg = error_of([] { parse_json_text("{", "input.json"); });
  CHECK(msg.find("input.json") != std::string::npos);
}

TEST_CASE("operators that are not nilpotent enough are rejected") {
  Json j = {{"dim", 1}, {"op", Json::parse("[[1]]")}};
  CHECK_THROWS_AS(module_from_json(dual_numbers, j, "$"), InputError);
}
