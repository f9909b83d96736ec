#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewpf/json_io.hpp"
#include "skewpf/random_gen.hpp"

using namespace skewpf;

TEST_CASE("skew matrices round-trip through JSON") {
  for (TypeLabel t : all_types()) {
    const SkewLinMatrix& m = catalog(t).M;
    Json j = skew_to_json(m);
    CHECK(skew_from_json(j) == m);
    // serialize -> parse -> serialize is a fixed point
    CHECK(skew_to_json(skew_from_json(j)) == j);
  }
  Rng rng(81);
  for (int trial = 0; trial < 10; ++trial) {
    SkewLinMatrix m = rng.skew_linear(6);
    CHECK(skew_from_json(skew_to_json(m)) == m);
  }
}

TEST_CASE("cubics round-trip through JSON") {
  Rng rng(83);
  for (int trial = 0; trial < 10; ++trial) {
    Polynomial f = rng.cubic_form();
    CHECK(cubic_from_json(cubic_to_json(f)) == f);
    CHECK(xpoly_from_json(xpoly_to_json(f)) == f);
  }
}

TEST_CASE("jets round-trip through JSON") {
  Rng rng(85);
  std::vector<SkewLinMatrix> coeffs{rng.skew_linear(6), rng.skew_linear(6), rng.skew_linear(6)};
  JetMatrix j(coeffs);
  CHECK(jet_from_json(jet_to_json(j)) == j);
}

TEST_CASE("malformed inputs are reported") {
  CHECK_THROWS_AS(skew_from_json(Json::object()), Error);
  CHECK_THROWS_AS(skew_from_json(Json{{"entries", Json{{"i", 0}}}}), Error);
  Json bad{{"entries", Json::array({Json{{"i", 3}, {"j", 1}, {"coeffs", Json::array({"1/1", "0/1", "0/1", "0/1", "0/1"})}}})}};
  CHECK_THROWS_AS(skew_from_json(bad), Error);
  CHECK_THROWS_AS(cubic_from_json(Json::object()), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}
