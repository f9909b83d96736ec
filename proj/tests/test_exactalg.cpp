#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "skewpf/degree_piece.hpp"
#include "skewpf/random_gen.hpp"

using namespace skewpf;

namespace {
Polynomial X(int k) { return Polynomial::var(x_var(k)); }

Polynomial random_poly(Rng& rng, int terms, int max_deg) {
  Polynomial p;
  for (int t = 0; t < terms; ++t) {
    Monomial m;
    int deg = rng.integer(0, max_deg);
    for (int d = 0; d < deg; ++d) m = m * Monomial::var(x_var(rng.integer(0, 4)));
    p += Polynomial::term(m, rng.rational());
  }
  return p;
}

Polynomial random_homogeneous(Rng& rng, int deg) {
  Polynomial p;
  for (const auto& m : monomial_basis(deg, x_vars()))
    if (rng.integer(0, 1)) p += Polynomial::term(m, rng.rational());
  return p;
}
}  // namespace

TEST_CASE("rational strings round-trip") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational r = rng.rational(1000, 997);
    CHECK(Rational::parse(r.str()) == r);
    CHECK(Rational::parse(r.str_pretty()) == r);
  }
  CHECK(Rational(2, -4).str() == "-1/2");
  CHECK(Rational(0, 7).str() == "0/1");
  CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("rank on the stated examples") {
  CHECK(QMatrix::identity(3).rank() == 3);
  CHECK(QMatrix(5, 7).rank() == 0);
}

TEST_CASE("rank agrees with fraction-free elimination on random matrices") {
  Rng rng(42);
  for (int trial = 0; trial < 30; ++trial) {
    QMatrix m(10, 10);
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) m.at(i, j) = rng.rational();
    // plant some dependent rows now and then
    if (trial % 3 == 0)
      for (int j = 0; j < 10; ++j) m.at(9, j) = m.at(0, j) + m.at(1, j);
    CHECK(m.rank() == oracles::bareiss_rank(m));
  }
}

TEST_CASE("kernel basis on the stated examples") {
  CHECK(QMatrix::identity(4).kernel_basis().rows() == 0);
  QMatrix m(1, 2);
  m.at(0, 0) = Rational(1);
  m.at(0, 1) = Rational(-1);
  QMatrix k = m.kernel_basis();
  REQUIRE(k.rows() == 1);
  CHECK(k.at(0, 0) == Rational(1));
  CHECK(k.at(0, 1) == Rational(1));
}

TEST_CASE("kernel basis rows annihilate and match rank-nullity") {
  Rng rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = rng.integer(2, 8), cols = rng.integer(2, 9);
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = rng.rational(4, 2);
    QMatrix k = m.kernel_basis();
    CHECK(k.rows() == cols - m.rank());
    QMatrix prod = m * k.transposed();
    CHECK(prod.is_zero());
  }
}

TEST_CASE("solve returns particular solutions exactly") {
  Rng rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix m(4, 6);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 6; ++j) m.at(i, j) = rng.rational(4, 2);
    QMatrix x(6, 1);
    for (int j = 0; j < 6; ++j) x.at(j, 0) = rng.rational(4, 2);
    QMatrix b = m * x;
    auto sol = m.solve(b);
    REQUIRE(sol.has_value());
    CHECK(m * *sol == b);
  }
}

TEST_CASE("grevlex order of the degree-2 basis") {
  std::vector<Monomial> basis = monomial_basis(2, x_vars());
  REQUIRE(basis.size() == 15);
  CHECK(basis[0] == Monomial::var(x_var(0), 2));                         // x0^2
  CHECK(basis[1] == Monomial::var(x_var(0)) * Monomial::var(x_var(1)));  // x0 x1
  CHECK(basis[2] == Monomial::var(x_var(1), 2));                         // x1^2
  CHECK(basis[3] == Monomial::var(x_var(0)) * Monomial::var(x_var(2)));  // x0 x2
  CHECK(basis.back() == Monomial::var(x_var(4), 2));                     // x4^2
}

TEST_CASE("polynomial arithmetic is a commutative ring") {
  Rng rng(99);
  for (int trial = 0; trial < 25; ++trial) {
    Polynomial p = random_poly(rng, 6, 3), q = random_poly(rng, 6, 3), r = random_poly(rng, 4, 2);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
  }
}

TEST_CASE("homogeneous products add degrees") {
  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    int d = rng.integer(1, 3), e = rng.integer(1, 3);
    Polynomial p = random_homogeneous(rng, d), q = random_homogeneous(rng, e);
    Polynomial prod = p * q;
    int deg = 0;
    CHECK(prod.is_homogeneous(&deg));
    if (!prod.is_zero()) CHECK(deg == d + e);
    CHECK((p + p).is_homogeneous());
  }
}

TEST_CASE("piece_span on the stated examples") {
  CHECK(DegreePiece::span({X(0) * X(0), X(0) * X(0)}, 2, x_vars()).dim() == 1);
  CHECK(DegreePiece::span({}, 3, x_vars()).dim() == 0);

  // the 15 degree-2 monomials span the full piece; count them independently
  int count = 0;
  for (int i = 0; i < 5; ++i)
    for (int j = i; j < 5; ++j) ++count;
  CHECK(count == 15);
  std::vector<Polynomial> all;
  for (const auto& m : monomial_basis(2, x_vars())) all.push_back(Polynomial::term(m, Rational(1)));
  CHECK(DegreePiece::span(all, 2, x_vars()).dim() == 15);
}

TEST_CASE("piece_span rejects mixed-degree input") {
  CHECK_THROWS_AS(DegreePiece::span({X(0) + X(0) * X(0)}, 2, x_vars()), Error);
}

TEST_CASE("piece_span is idempotent and order-independent") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<Polynomial> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(random_homogeneous(rng, 2));
    DegreePiece a = DegreePiece::span(gens, 2, x_vars());
    std::vector<Polynomial> reversed(gens.rbegin(), gens.rend());
    reversed.push_back(gens.front());
    DegreePiece b = DegreePiece::span(reversed, 2, x_vars());
    CHECK(a == b);
    CHECK(DegreePiece::span(a.basis_polynomials(), 2, x_vars()) == a);
  }
}

TEST_CASE("piece_ops on the stated examples") {
  DegreePiece v = DegreePiece::span({X(0) * X(1), X(2) * X(2)}, 2, x_vars());
  CHECK(piece_ops(v, v, PieceOp::Intersection) == v);
  DegreePiece w1 = DegreePiece::span({X(0) * X(1)}, 2, x_vars());
  DegreePiece w2 = DegreePiece::span({X(2) * X(3)}, 2, x_vars());
  CHECK(piece_ops(w1, w2, PieceOp::Intersection).dim() == 0);
  bool contained = false;
  piece_ops(w1, v, PieceOp::ContainsTest, &contained);
  CHECK(contained);
  piece_ops(v, w1, PieceOp::ContainsTest, &contained);
  CHECK_FALSE(contained);
}

TEST_CASE("sum and intersection dimensions satisfy the modular formula") {
  Rng rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> ga, gb;
    for (int i = 0; i < 5; ++i) ga.push_back(random_homogeneous(rng, 2));
    for (int i = 0; i < 5; ++i) gb.push_back(random_homogeneous(rng, 2));
    // bias towards genuine intersections
    gb.push_back(ga[0] + ga[1]);
    DegreePiece a = DegreePiece::span(ga, 2, x_vars());
    DegreePiece b = DegreePiece::span(gb, 2, x_vars());
    DegreePiece s = a.sum(b), i = a.intersect(b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(s.contains(b));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
}

TEST_CASE("piece ops reject mismatched ambients") {
  DegreePiece a = DegreePiece::span({X(0) * X(1)}, 2, x_vars());
  DegreePiece b = DegreePiece::span({X(0)}, 1, x_vars());
  CHECK_THROWS_AS(a.sum(b), Error);
  CHECK_THROWS_AS(a.intersect(b), Error);
}

TEST_CASE("residue vanishes exactly on members") {
  Rng rng(23);
  std::vector<Polynomial> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(random_homogeneous(rng, 2));
  DegreePiece piece = DegreePiece::span(gens, 2, x_vars());
  Polynomial member = gens[0] * Rational(3, 2) - gens[2];
  CHECK(piece.contains(member));
  CHECK(piece.residue(member).is_zero());
  // a full-degree monomial basis element is generically outside
  if (piece.dim() < 15) {
    Polynomial probe;
    for (const auto& m : monomial_basis(2, x_vars())) {
      probe = Polynomial::term(m, Rational(1));
      if (!piece.contains(probe)) break;
    }
    CHECK_FALSE(piece.residue(probe).is_zero());
  }
}
