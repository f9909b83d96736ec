#include "skewpf/strata.hpp"

#include <random>

#include "skewpf/ideal_pieces.hpp"
#include "skewpf/jets.hpp"

namespace skewpf {

namespace {

Polynomial X(int k) { return Polynomial::var(x_var(k)); }
Polynomial T() { return Polynomial::var(kTVar); }

SkewLinMatrix A_block() { return SkewLinMatrix::skew3(X(0), X(1), X(2)); }

DeformationFamily stratification_family(Arrow a) {
  DeformationFamily fam;
  fam.arrow = a;
  PolyGrid Agrid = A_block().grid();
  SkewLinMatrix zero3(3);
  switch (a) {
    case Arrow::a_to_c: {
      // catalog (a) with the (3,4)-entry deformed to x3 + x4 t
      SkewLinMatrix m = catalog(TypeLabel::a).M;
      m.set(3, 4, X(3) + X(4) * T());
      fam.Mt = m;
      fam.generic_type = TypeLabel::a;
      fam.special_type = TypeLabel::c;
      fam.reference_ideals = {{X(1), X(2), X(0) * X(0) - X(3) * X(3) - X(3) * X(4) * T()}};
      return fam;
    }
    case Arrow::b_to_d: {
      fam.Mt = SkewLinMatrix::from_blocks(
          SkewLinMatrix::skew3(X(3) * T() * T(), X(4) * T() * T(), Polynomial()), Agrid,
          SkewLinMatrix::skew3(X(3), X(4), Polynomial()));
      fam.generic_type = TypeLabel::b;
      fam.special_type = TypeLabel::d;
      fam.reference_ideals = {{X(2), X(1) + T() * X(4), X(0) + T() * X(3)},
                            {X(2), X(1) - T() * X(4), X(0) - T() * X(3)}};
      return fam;
    }
    case Arrow::c_to_e: {
      fam.Mt = SkewLinMatrix::from_blocks(
          SkewLinMatrix::skew3(X(3) * T() * T(), Polynomial(), Polynomial()), Agrid,
          SkewLinMatrix::skew3(X(3), Polynomial(), Polynomial()));
      fam.generic_type = TypeLabel::c;
      fam.special_type = TypeLabel::e;
      fam.reference_ideals = {{X(1), X(2), X(0) * X(0) - X(3) * X(3) * T() * T()}};
      return fam;
    }
    case Arrow::b_to_c: {
      // conjugated form of (b) with bottom block skew3(l4, l2, l3) and the
      // substitution l4 -> l1 + t l4 interpolating to the (c) normal form
      fam.Mt = SkewLinMatrix::from_blocks(A_block(), PolyGrid(3, std::vector<Polynomial>(3)),
                                          SkewLinMatrix::skew3(X(1) + X(4) * T(), X(2), X(3)));
      fam.generic_type = TypeLabel::b;
      fam.special_type = TypeLabel::c;
      return fam;
    }
    case Arrow::d_to_e: {
      // (d) with l4 -> t l4
      fam.Mt = SkewLinMatrix::from_blocks(SkewLinMatrix(3), Agrid,
                                          SkewLinMatrix::skew3(X(3), X(4) * T(), Polynomial()));
      fam.generic_type = TypeLabel::d;
      fam.special_type = TypeLabel::e;
      return fam;
    }
    case Arrow::e_to_f: {
      // (e) with l3 -> t l3
      fam.Mt = SkewLinMatrix::from_blocks(SkewLinMatrix(3), Agrid,
                                          SkewLinMatrix::skew3(X(3) * T(), Polynomial(), Polynomial()));
      fam.generic_type = TypeLabel::e;
      fam.special_type = TypeLabel::f;
      return fam;
    }
    case Arrow::case3:
      break;
  }
  fail(Errc::UnknownArrow, "not a stratification arrow");
}

}  // namespace

std::string arrow_name(Arrow a) {
  switch (a) {
    case Arrow::b_to_c: return "b->c";
    case Arrow::d_to_e: return "d->e";
    case Arrow::e_to_f: return "e->f";
    case Arrow::a_to_c: return "a->c";
    case Arrow::b_to_d: return "b->d";
    case Arrow::c_to_e: return "c->e";
    case Arrow::case3: return "case3";
  }
  return "?";
}

Arrow parse_arrow(const std::string& s) {
  for (Arrow a : all_arrows())
    if (arrow_name(a) == s) return a;
  fail(Errc::UnknownArrow, "unknown arrow '" + s + "'");
}

const std::vector<Arrow>& all_arrows() {
  static const std::vector<Arrow> arrows{Arrow::b_to_c, Arrow::d_to_e, Arrow::e_to_f,
                                         Arrow::a_to_c, Arrow::b_to_d, Arrow::c_to_e,
                                         Arrow::case3};
  return arrows;
}

DeformationFamily family(Arrow a) {
  if (a == Arrow::case3) {
    // default blocks taken from the catalog (e) shape M = [[0, 2A],[2A, -B]]
    SkewLinMatrix A = A_block().scaled(Rational(1, 2));
    SkewLinMatrix B = -SkewLinMatrix::skew3(X(3), Polynomial(), Polynomial());
    return case3_family(A, B);
  }
  return stratification_family(a);
}

DeformationFamily case3_family(const SkewLinMatrix& A, const SkewLinMatrix& B, int order) {
  if (A.size() != 3 || B.size() != 3) fail(Errc::NotSkew, "blocks must be skew 3x3");
  if (!A.is_linear_in_x() || !B.is_linear_in_x())
    fail(Errc::NotSkew, "blocks must have entries linear in x");
  if (order < 1) fail(Errc::BadInput, "order must be >= 1");

  Polynomial t = T();
  // A_t = A + tB; higher-order terms of the local family are taken to be zero,
  // for which every identity below is exact.
  SkewLinMatrix At = A + B.scaled(t);
  auto grid_sum = [](const PolyGrid& p, const PolyGrid& q) {
    PolyGrid r(3, std::vector<Polynomial>(3));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r[i][j] = p[i][j] + q[i][j];
    return r;
  };
  SkewLinMatrix Mt = SkewLinMatrix::from_blocks(B.scaled(-(t * t)), grid_sum(A.grid(), At.grid()),
                                                -B);

  // diag(A, -A_t), conjugated by [[1,1],[-1,1]] blockwise, then by diag(t,1).
  SkewLinMatrix D = SkewLinMatrix::from_blocks(A, PolyGrid(3, std::vector<Polynomial>(3)), -At);
  QMatrix C1(6, 6);
  for (int i = 0; i < 3; ++i) {
    C1.at(i, i) = Rational(1);
    C1.at(i, 3 + i) = Rational(1);
    C1.at(3 + i, i) = Rational(-1);
    C1.at(3 + i, 3 + i) = Rational(1);
  }
  SkewLinMatrix step1 = D.conjugated(C1);
  SkewLinMatrix expected1 = SkewLinMatrix::from_blocks((A - At), grid_sum(A.grid(), At.grid()),
                                                       (A - At));
  if (!(step1 == expected1)) fail(Errc::BadInput, "block conjugation identity failed");

  PolyGrid C2(6, std::vector<Polynomial>(6));
  for (int i = 0; i < 3; ++i) {
    C2[i][i] = t;
    C2[3 + i][3 + i] = Polynomial(Rational(1));
  }
  SkewLinMatrix step2 = step1.conjugated(C2);
  if (!(step2 == Mt.scaled(t))) fail(Errc::BadInput, "scaling conjugation identity failed");

  SkewLinMatrix M0 = Mt.eval_t(Rational(0));
  SkewLinMatrix expected0 = SkewLinMatrix::from_blocks(
      SkewLinMatrix(3), grid_sum(A.grid(), A.grid()), -B);
  if (!(M0 == expected0)) fail(Errc::BadInput, "t = 0 fibre is not [[0, 2A],[2A, -B]]");

  DeformationFamily fam;
  fam.arrow = Arrow::case3;
  fam.Mt = Mt;
  // With the higher-order terms of A_t set to zero the generic fibre is
  // conjugate to diag(A, -A-tB), whose two lines meet: type (c).
  fam.generic_type = TypeLabel::c;
  fam.special_type = TypeLabel::e;
  return fam;
}

FamilyReport verify_family(Arrow a, std::uint64_t seed) {
  DeformationFamily fam = family(a);
  FamilyReport rep{};
  rep.arrow = a;

  rep.pf_zero = pfaffian(fam.Mt).is_zero();

  if (!fam.reference_ideals.empty()) {
    bool ok = true;
    for (const auto& ideal : fam.reference_ideals)
      for (const auto& q : sub_pfaffians(fam.Mt))
        if (!parametric_quadric_membership(ideal, q)) ok = false;
    rep.subpf_in_ideals = ok;
  }

  std::mt19937_64 rng(seed ^ 0x51a7aull);
  std::uniform_int_distribution<long> num(1, 7), den(1, 3);
  Rational t0(num(rng), den(rng));
  bool generic_ok = classify(fam.Mt.eval_t(t0)).label == fam.generic_type;
  bool special_ok = classify(fam.Mt.eval_t(Rational(0))).label == fam.special_type;
  rep.endpoints = generic_ok && special_ok;

  rep.rank2_jet = true;
  if (a == Arrow::case3) {
    // [[0, -2 eps B],[-2 eps B, -B]] has rank 2 over Q[eps]/(eps^2): all 15
    // sub-Pfaffians are the zero jet.
    SkewLinMatrix B = -SkewLinMatrix::skew3(X(3), Polynomial(), Polynomial());
    SkewLinMatrix c0 =
        SkewLinMatrix::from_blocks(SkewLinMatrix(3), PolyGrid(3, std::vector<Polynomial>(3)), -B);
    SkewLinMatrix c1 = SkewLinMatrix::from_blocks(SkewLinMatrix(3), B.scaled(Rational(-2)).grid(),
                                                  SkewLinMatrix(3));
    JetMatrix jet({c0, c1});
    for (const auto& q : jet_sub_pfaffians(jet))
      if (!q.is_zero()) rep.rank2_jet = false;
  }
  return rep;
}

}  // namespace skewpf
