#include "skewpf/closure.hpp"

#include "skewpf/ideal_pieces.hpp"
#include "skewpf/tangent.hpp"

namespace skewpf {

std::string branch_name(ClosureBranch b) {
  switch (b) {
    case ClosureBranch::PfaffianNonzero: return "pfaffian-nonzero";
    case ClosureBranch::TypeABD: return "type-abd";
    case ClosureBranch::TypeCE: return "type-ce";
    case ClosureBranch::TypeF: return "type-f";
  }
  return "?";
}

DegreePiece test_piece(const SkewLinMatrix& m, int colon_cap) {
  TypeLabel t = classify(m).label;
  switch (t) {
    case TypeLabel::a:
    case TypeLabel::b:
    case TypeLabel::d:
      return ideal_piece(sub_pfaffians(m), 3);
    case TypeLabel::c:
    case TypeLabel::e:
      return saturate_piece(sub_pfaffians(m), rank0_point(m), 3, colon_cap);
    case TypeLabel::f: {
      DegreePiece span = entry_span(m);
      return ideal_piece(span.basis_polynomials(), 3);
    }
  }
  fail(Errc::Unclassified, "unreachable");
}

namespace {

// Solve F = sum_{a<b} (-1)^{a+b+1} l_{ab} q_{ab}(m) for linear forms l_{ab}
// and assemble them into the skew witness matrix. The coefficient matrix of
// the map is exactly the tangent system of m.
std::optional<SkewLinMatrix> solve_witness(const SkewLinMatrix& m, const Polynomial& F) {
  TangentSystem sys = tangent_system(m);
  std::vector<Monomial> cubics = monomial_basis(3, x_vars());
  QMatrix rhs(35, 1);
  for (size_t i = 0; i < cubics.size(); ++i) rhs.at(static_cast<int>(i), 0) = F.coeff(cubics[i]);
  std::optional<QMatrix> sol = sys.coeff.solve(rhs);
  if (!sol) return std::nullopt;
  return unflatten_coords(sol->transposed());
}

}  // namespace

ClosureVerdict in_closure(const SkewLinMatrix& m, const CubicForm& F, int colon_cap) {
  ClosureVerdict v;
  Polynomial pf = pfaffian(m);
  if (!pf.is_zero()) {
    v.branch = ClosureBranch::PfaffianNonzero;
    v.yes = poly_proportional(F.f, pf).has_value();
    return v;
  }
  TypeLabel t = classify(m).label;
  DegreePiece piece = test_piece(m, colon_cap);
  switch (t) {
    case TypeLabel::a:
    case TypeLabel::b:
    case TypeLabel::d: {
      v.branch = ClosureBranch::TypeABD;
      std::optional<SkewLinMatrix> w = solve_witness(m, F.f);
      v.yes = w.has_value();
      if (w) {
        // soundness re-check of the certificate through the jet route
        JetPolynomial jp = jet_pfaffian(JetMatrix({m, *w}));
        if (!jp.coeff(0).is_zero() || jp.coeff(1) != F.f)
          fail(Errc::BadInput, "witness failed the jet re-check");
        v.witness = std::move(w);
      }
      return v;
    }
    case TypeLabel::c:
    case TypeLabel::e:
      v.branch = ClosureBranch::TypeCE;
      break;
    case TypeLabel::f:
      v.branch = ClosureBranch::TypeF;
      break;
  }
  v.yes = piece.contains(F.f);
  if (v.yes) {
    // coordinates of F in the canonical basis of the test piece
    QMatrix coords(1, piece.dim());
    QMatrix fvec = piece.coords(F.f);
    for (int r = 0; r < piece.dim(); ++r) coords.at(0, r) = fvec.at(0, piece.pivot_columns()[r]);
    v.membership_coords = coords;
  }
  return v;
}

JetMatrix witness_jet(const SkewLinMatrix& m, const CubicForm& F) {
  TypeLabel t = classify(m).label;
  if (t != TypeLabel::a && t != TypeLabel::b && t != TypeLabel::d)
    fail(Errc::WrongType, "witness jets exist for types (a), (b), (d)");
  std::optional<SkewLinMatrix> w = solve_witness(m, F.f);
  if (!w) fail(Errc::NotInPiece, "cubic is not in the test piece");
  return JetMatrix({m, *w});
}

}  // namespace skewpf
