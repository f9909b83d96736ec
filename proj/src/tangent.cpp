#include "skewpf/tangent.hpp"

#include "skewpf/ideal_pieces.hpp"

namespace skewpf {

namespace {

std::vector<Monomial> cubic_basis() { return monomial_basis(3, x_vars()); }

std::map<Monomial, int, GrevlexLess> index_of(const std::vector<Monomial>& basis) {
  std::map<Monomial, int, GrevlexLess> idx;
  for (size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
  return idx;
}

}  // namespace

std::map<Var, Polynomial> TangentSystem::restriction() const {
  std::map<Var, Polynomial> images;
  for (int j = 0; j < 75; ++j) {
    Polynomial img;
    for (int p = 0; p < kernel.rows(); ++p)
      img += Polynomial::var(static_cast<Var>(kABase + free_cols[p])) * kernel.at(p, j);
    images.emplace(static_cast<Var>(kABase + j), img);
  }
  return images;
}

SkewLinMatrix TangentSystem::symbolic_tangent_vector() const {
  return symbolic_skew('a').substituted(restriction());
}

TangentSystem tangent_system(const SkewLinMatrix& m) {
  if (m.size() != 6) fail(Errc::BadInput, "tangent system expects a 6x6 matrix");
  if (!pfaffian(m).is_zero()) fail(Errc::PfaffianNonZero, "matrix has nonzero Pfaffian");
  TangentSystem sys;
  sys.base = m;

  // eps-coefficient of Pf(m + eps M') with M' symbolic: linear in the a_{ijk}.
  Polynomial f1 = laplace_pairing(symbolic_skew('a'), m);
  std::vector<Monomial> cubics = cubic_basis();
  auto row_of = index_of(cubics);
  sys.coeff = QMatrix(35, 75);
  for (const auto& [mon, c] : f1.terms()) {
    auto [xpart, apart] = mon.split([](Var v) { return is_x(v); });
    if (apart.factors().size() != 1 || apart.degree() != 1 || xpart.degree() != 3)
      fail(Errc::BadInput, "unexpected term in tangent linearisation");
    int col = apart.factors()[0].first - kABase;
    sys.coeff.at(row_of.at(xpart), col) = c;
  }
  sys.codim = sys.coeff.rank();
  sys.kernel = sys.coeff.kernel_basis();
  // free coordinates are the pivot columns of the kernel basis
  sys.kernel.rref_in_place(&sys.free_cols);
  return sys;
}

int tangent_codim(const SkewLinMatrix& m) { return tangent_system(m).codim; }

namespace {

// Cubic-coefficient vector of a polynomial of x-degree 3 with parameter
// coefficients: g[i] = coefficient polynomial of the i-th cubic monomial.
std::vector<Polynomial> cubic_coefficient_vector(const Polynomial& g) {
  std::vector<Monomial> cubics = cubic_basis();
  auto row_of = index_of(cubics);
  std::vector<Polynomial> vec(cubics.size());
  for (const auto& [mon, c] : g.terms()) {
    auto [xpart, rest] = mon.split([](Var v) { return is_x(v); });
    if (xpart.degree() != 3) fail(Errc::BadInput, "term of x-degree != 3");
    vec[row_of.at(xpart)] += Polynomial::term(rest, c);
  }
  return vec;
}

JetPolynomial order2_pfaffian_jet(const TangentSystem& sys) {
  SkewLinMatrix m1 = sys.symbolic_tangent_vector();
  SkewLinMatrix m2 = symbolic_skew('b');
  JetPolynomial jp = jet_pfaffian(JetMatrix({sys.base, m1, m2}));
  if (!jp.coeff(0).is_zero() || !jp.coeff(1).is_zero())
    fail(Errc::BadInput, "tangent parametrisation does not kill the eps-term");
  return jp;
}

}  // namespace

ConeQuadrics cone_deg2(const SkewLinMatrix& m) {
  TangentSystem sys = tangent_system(m);
  JetPolynomial jp = order2_pfaffian_jet(sys);
  std::vector<Polynomial> f2 = cubic_coefficient_vector(jp.coeff(2));

  // Each coefficient splits as q_i(a) + l_i(b). Combinations killing all the
  // b-parts are quadrics vanishing on the degree-2 cone approximation.
  QMatrix bmat(35, 75);
  std::vector<Polynomial> apart(35);
  for (int i = 0; i < 35; ++i) {
    for (const auto& [mon, c] : f2[i].terms()) {
      if (mon.degree_in(kBBase, kTVar) == 1 && mon.degree() == 1)
        bmat.at(i, mon.factors()[0].first - kBBase) = c;
      else if (mon.degree_in(kABase, kBBase) == 2 && mon.degree() == 2)
        apart[i] += Polynomial::term(mon, c);
      else
        fail(Errc::BadInput, "unexpected term in eps^2 coefficient");
    }
  }
  QMatrix left_kernel = bmat.transposed().kernel_basis();
  std::vector<Polynomial> quadrics;
  for (int r = 0; r < left_kernel.rows(); ++r) {
    Polynomial q;
    for (int i = 0; i < 35; ++i) q += apart[i] * left_kernel.at(r, i);
    if (!q.is_zero()) quadrics.push_back(q);
  }
  return ConeQuadrics{DegreePiece::span(quadrics, 2, a_vars())};
}

DegreePiece restricted_quadric_span(const TangentSystem& sys, const std::vector<Polynomial>& quadrics) {
  std::map<Var, Polynomial> sigma = sys.restriction();
  std::vector<Polynomial> restricted;
  for (const auto& q : quadrics) restricted.push_back(q.substituted(sigma));
  return DegreePiece::span(restricted, 2, a_vars());
}

bool parametric_2jet_check(const SkewLinMatrix& m) {
  TypeLabel t = classify(m).label;
  if (t != TypeLabel::c && t != TypeLabel::e)
    fail(Errc::WrongType, "parametric 2-jet check is defined for types (c) and (e) only");

  TangentSystem sys = tangent_system(m);
  JetPolynomial jp = order2_pfaffian_jet(sys);
  std::vector<Polynomial> g = cubic_coefficient_vector(jp.coeff(2));

  DegreePiece sat = saturate_piece(sub_pfaffians(m), rank0_point(m), 3);
  // Reduce the coefficient vector modulo the fixed rational subspace; the
  // residue must be the zero vector of polynomials in all 150 parameters.
  const QMatrix& basis = sat.basis_matrix();
  const std::vector<int>& pivots = sat.pivot_columns();
  for (int r = 0; r < basis.rows(); ++r) {
    Polynomial lead = g[pivots[r]];
    if (lead.is_zero()) continue;
    for (int j = 0; j < 35; ++j) {
      if (basis.at(r, j).is_zero()) continue;
      g[j] -= lead * basis.at(r, j);
    }
  }
  for (const auto& residue : g)
    if (!residue.is_zero()) return false;
  return true;
}

QMatrix orbit_action_matrix(const SkewLinMatrix& m) {
  if (m.size() != 6) fail(Errc::BadInput, "orbit action expects a 6x6 matrix");
  if (m.has_parameters()) fail(Errc::BadInput, "orbit action expects entries in x only");
  QMatrix phi(75, 61);
  int col = 0;
  // gl6 part: E_rs^T m + m E_rs.
  for (int r = 0; r < 6; ++r)
    for (int s = 0; s < 6; ++s, ++col) {
      SkewLinMatrix img(6);
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
          Polynomial p;
          if (i == s) p += m.entry(r, j);
          if (j == s) p += m.entry(i, r);
          img.set(i, j, p);
        }
      QMatrix v = flatten_coords(img);
      for (int row = 0; row < 75; ++row) phi.at(row, col) = v.at(0, row);
    }
  // gl5 part: derivative of the coordinate substitution x_k -> x_k + tau x_l.
  for (int k = 0; k < kNumX; ++k)
    for (int l = 0; l < kNumX; ++l, ++col) {
      SkewLinMatrix img(6);
      for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
          Rational ck = m.upper(i, j).coeff(Monomial::var(x_var(k)));
          img.set(i, j, Polynomial::var(x_var(l)) * ck);
        }
      QMatrix v = flatten_coords(img);
      for (int row = 0; row < 75; ++row) phi.at(row, col) = v.at(0, row);
    }
  return phi;
}

int orbit_codim(const SkewLinMatrix& m) { return 75 - orbit_action_matrix(m).rank(); }

QMatrix conjugation_coordinate_map(const QMatrix& B) {
  QMatrix L(75, 75);
  for (int r = 0; r < 75; ++r) {
    QMatrix e(1, 75);
    e.at(0, r) = Rational(1);
    QMatrix img = flatten_coords(unflatten_coords(e).conjugated(B));
    for (int c = 0; c < 75; ++c) L.at(r, c) = img.at(0, c);
  }
  return L;
}

}  // namespace skewpf
