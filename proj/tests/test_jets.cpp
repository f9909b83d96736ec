#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "skewpf/classify.hpp"
#include "skewpf/jets.hpp"
#include "skewpf/random_gen.hpp"

using namespace skewpf;

namespace {
Polynomial X(int k) { return Polynomial::var(x_var(k)); }

JetPolynomial random_jet_poly(Rng& rng, int order, int deg) {
  JetPolynomial j(order);
  for (int k = 0; k <= order; ++k) {
    Polynomial p;
    for (const auto& m : monomial_basis(deg, x_vars()))
      if (rng.integer(0, 2) == 0) p += Polynomial::term(m, rng.rational(3, 2));
    j.set_coeff(k, p);
  }
  return j;
}

JetMatrix random_jet_matrix(Rng& rng, int order) {
  std::vector<SkewLinMatrix> coeffs;
  for (int k = 0; k <= order; ++k) coeffs.push_back(rng.skew_linear(6));
  return JetMatrix(std::move(coeffs));
}
}  // namespace

TEST_CASE("truncation basics") {
  Rng rng(2);
  JetPolynomial j = random_jet_poly(rng, 2, 1);
  CHECK(j.truncate(2) == j);
  JetPolynomial t1 = j.truncate(1);
  CHECK(t1.order() == 1);
  CHECK(t1.coeff(0) == j.coeff(0));
  CHECK(t1.coeff(1) == j.coeff(1));
  CHECK_THROWS_AS(j.truncate(3), Error);
}

TEST_CASE("iterated truncation lands at the smaller order") {
  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    JetPolynomial j = random_jet_poly(rng, 4, 1);
    int m1 = static_cast<int>(rng.integer(0, 4)), m2 = static_cast<int>(rng.integer(0, 4));
    int lo = std::min(m1, m2);
    CHECK(j.truncate(m1).truncate(std::min(m1, m2)) == j.truncate(lo));
  }
}

TEST_CASE("covering basics") {
  Rng rng(6);
  JetPolynomial j = random_jet_poly(rng, 1, 1);
  CHECK(j.cover(1) == j);
  JetPolynomial c = j.cover(2);
  CHECK(c.order() == 2);
  CHECK(c.coeff(0) == j.coeff(0));
  CHECK(c.coeff(1).is_zero());
  CHECK(c.coeff(2) == j.coeff(1));
}

TEST_CASE("covering is a ring homomorphism") {
  Rng rng(8);
  for (int trial = 0; trial < 10; ++trial) {
    JetPolynomial a = random_jet_poly(rng, 2, 1), b = random_jet_poly(rng, 2, 1);
    int r = static_cast<int>(rng.integer(2, 3));
    CHECK((a * b).cover(r) == a.cover(r) * b.cover(r));
    CHECK((a + b).cover(r) == a.cover(r) + b.cover(r));
  }
}

TEST_CASE("truncation and covering commute as stated") {
  Rng rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    JetPolynomial j = random_jet_poly(rng, 2, 1);
    int r = static_cast<int>(rng.integer(2, 3));
    int m = static_cast<int>(rng.integer(0, 2 * r));
    JetPolynomial lhs = j.cover(r).truncate(m);
    JetPolynomial rhs = j.truncate(m / r).cover(r);
    // compare after truncating the right side to m as well
    if (rhs.order() > m) rhs = rhs.truncate(m);
    // the left side may have order m > r*floor(m/r); pad-free comparison
    CHECK(lhs.truncate(std::min(lhs.order(), rhs.order())) ==
          rhs.truncate(std::min(lhs.order(), rhs.order())));
    for (int k = rhs.order() + 1; k <= lhs.order(); ++k) CHECK(lhs.coeff(k).is_zero());
  }
}

TEST_CASE("jet pfaffian of an order-0 catalog jet is the zero jet") {
  for (TypeLabel t : all_types()) {
    JetMatrix j({catalog(t).M});
    CHECK(jet_pfaffian(j).is_zero());
  }
}

TEST_CASE("jet pfaffian matches substitution and expansion in t") {
  Rng rng(12);
  for (int trial = 0; trial < 6; ++trial) {
    // constants and matrices of linear forms both
    JetMatrix j = trial % 2 == 0
                      ? JetMatrix({rng.skew_rational(6), rng.skew_rational(6), rng.skew_rational(6)})
                      : random_jet_matrix(rng, 2);
    // oracle: Pf(M0 + t M1 + t^2 M2) expanded as a polynomial in t, truncated
    Polynomial t = Polynomial::var(kTVar);
    SkewLinMatrix mt = j.coeff(0) + j.coeff(1).scaled(t) + j.coeff(2).scaled(t * t);
    Polynomial full = pfaffian(mt);
    auto by_t = full.collect([](Var v) { return v == kTVar; });
    JetPolynomial jp = jet_pfaffian(j);
    for (int k = 0; k <= 2; ++k) {
      Monomial tk = Monomial::var(kTVar, k);
      auto it = by_t.find(tk);
      Polynomial expected = it == by_t.end() ? Polynomial() : it->second;
      CHECK(jp.coeff(k) == expected);
    }
  }
}

TEST_CASE("jet pfaffian commutes with truncation and covering") {
  Rng rng(14);
  for (int trial = 0; trial < 5; ++trial) {
    JetMatrix j = random_jet_matrix(rng, 2);
    CHECK(jet_pfaffian(j.truncate(1)) == jet_pfaffian(j).truncate(1));
    CHECK(jet_pfaffian(j.cover(2)) == jet_pfaffian(j).cover(2));
  }
}

TEST_CASE("first nonzero coefficient extraction") {
  JetPolynomial zero(2);
  CHECK_FALSE(zero.first_nonzero().has_value());
  JetPolynomial j(2);
  j.set_coeff(2, X(0) * X(0) * X(0));
  auto fn = j.first_nonzero();
  REQUIRE(fn.has_value());
  CHECK(fn->first == 2);
  CHECK(fn->second == X(0) * X(0) * X(0));
}

TEST_CASE("proportionality on the stated examples") {
  Rng rng(16);
  JetPolynomial jf = random_jet_poly(rng, 2, 3);
  while (jf.coeff(0).is_zero()) jf = random_jet_poly(rng, 2, 3);
  CHECK(proportionality_check(jf, jf));

  JetPolynomial scaled(2);
  for (int k = 0; k <= 2; ++k) {
    Polynomial c = jf.coeff(k) * Rational(2);
    if (k >= 1) c += jf.coeff(k - 1) * Rational(3);
    scaled.set_coeff(k, c);  // (2 + 3 eps) * jf
  }
  std::vector<Rational> unit;
  CHECK(proportionality_check(scaled, jf, &unit));
  REQUIRE(unit.size() >= 2);
  CHECK(unit[0] == Rational(2));
  CHECK(unit[1] == Rational(3));

  JetPolynomial jp(1), jq(1);
  jp.set_coeff(1, X(0) * X(0) * X(0));
  jq.set_coeff(0, X(1) * X(1) * X(1));
  jq.set_coeff(1, X(2) * X(2) * X(2));
  CHECK_FALSE(proportionality_check(jp, jq));
}

TEST_CASE("a unit multiple pins the leading coefficient") {
  Rng rng(18);
  for (int trial = 0; trial < 10; ++trial) {
    JetPolynomial jf = random_jet_poly(rng, 2, 3);
    while (jf.coeff(0).is_zero()) jf = random_jet_poly(rng, 2, 3);
    Rational u0 = rng.nonzero_rational(), u1 = rng.rational(), u2 = rng.rational();
    JetPolynomial jp(2);
    jp.set_coeff(0, jf.coeff(0) * u0);
    jp.set_coeff(1, jf.coeff(1) * u0 + jf.coeff(0) * u1);
    jp.set_coeff(2, jf.coeff(2) * u0 + jf.coeff(1) * u1 + jf.coeff(0) * u2);
    CHECK(proportionality_check(jp, jf));
    auto fn = jp.first_nonzero();
    REQUIRE(fn.has_value());
    CHECK(fn->first == 0);
    auto ratio = poly_proportional(fn->second, jf.coeff(0));
    REQUIRE(ratio.has_value());
    CHECK(*ratio == u0);
  }
}
